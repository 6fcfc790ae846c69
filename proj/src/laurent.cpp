#include "ggraph/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace ggraph {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in addition");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in multiplication");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(std::int64_t c) {
  if (c != 0) terms_.push_back({0, c});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  for (auto [e, c] : terms) add_scaled(LaurentPoly(c), 1, e);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::x_minus_x_inv() {
  LaurentPoly p;
  p.terms_ = {{-1, -1}, {1, 1}};
  return p;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  return it != terms_.end() && it->exp == exp ? it->coeff : 0;
}

bool LaurentPoly::in_neg_span() const { return terms_.empty() || terms_.back().exp <= -1; }

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exp, it->coeff});
  return p;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s = checked::add(s, t.coeff);
  return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& q, std::int64_t c, int shift) {
  if (c == 0 || q.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->exp + shift < a->exp) {
      out.push_back({b->exp + shift, checked::mul(c, b->coeff)});
      ++b;
    } else {
      const std::int64_t v = checked::add(a->coeff, checked::mul(c, b->coeff));
      if (v != 0) out.push_back({a->exp, v});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
  add_scaled(q, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
  add_scaled(q, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
  *this = *this * q;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& t : q.terms_) r.add_scaled(p, t.coeff, t.exp);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly r = p;
  for (auto& t : r.terms_) t.coeff = checked::mul(t.coeff, -1);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = t.coeff;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (t.exp == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "x";
    if (t.exp != 1) out += "^" + std::to_string(t.exp);
  }
  return out;
}

}  // namespace ggraph
