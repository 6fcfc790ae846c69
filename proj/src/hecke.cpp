#include "ggraph/hecke.hpp"

#include <algorithm>

#include "ggraph/errors.hpp"

namespace ggraph {

HeckeElement HeckeElement::basis(const Permutation& w, LaurentPoly c) {
  HeckeElement h(w.size());
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElement::coeff(const Permutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add(const Permutation& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (w.size() != n_) throw PreconditionError("Hecke element and permutation have different n");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& h) {
  for (const auto& [w, c] : h.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& h) {
  for (const auto& [w, c] : h.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement out(h.n());
  for (const auto& [w, p] : h.terms_) out.add(w, c * p);
  return out;
}

HeckeElement h_s_mul(int i, const HeckeElement& h) {
  const int n = h.n();
  if (i < 1 || i >= n) throw PreconditionError("generator index out of range");
  const Permutation s = Permutation::simple(n, i);
  const LaurentPoly q = LaurentPoly::x_minus_x_inv();
  HeckeElement out(n);
  for (const auto& [w, c] : h.terms()) {
    Permutation sw = s * w;
    if (length(sw) < length(w)) out.add(w, q * c);
    out.add(sw, c);
  }
  return out;
}

namespace {

const HeckeElement& bar_of_basis(const Permutation& w) {
  thread_local std::map<Permutation, HeckeElement> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  const LaurentPoly q = LaurentPoly::x_minus_x_inv();
  const auto word = reduced_word(w);
  HeckeElement acc = HeckeElement::basis(Permutation::identity(w.size()));
  for (auto r = word.rbegin(); r != word.rend(); ++r) acc = h_s_mul(*r, acc) - q * acc;
  return cache.emplace(w, std::move(acc)).first->second;
}

}  // namespace

HeckeElement h_bar(const HeckeElement& h) {
  HeckeElement out(h.n());
  for (const auto& [w, c] : h.terms()) out += c.bar() * bar_of_basis(w);
  return out;
}

RegularModule regular_module(int n, Side side) {
  if (n < 1) throw PreconditionError("regular module needs n >= 1");
  RegularModule rm;
  rm.n = n;
  rm.side = side;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) word[static_cast<std::size_t>(j)] = j + 1;
  std::vector<std::pair<int, Permutation>> keyed;
  do {
    Permutation w(word);
    keyed.emplace_back(length(w), w);
  } while (std::next_permutation(word.begin(), word.end()));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<int> lengths;
  for (auto& [len, w] : keyed) {
    rm.index.emplace(w, static_cast<std::uint32_t>(rm.elements.size()));
    rm.elements.push_back(w);
    lengths.push_back(len);
  }
  std::vector<std::vector<Action>> actions(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    const Permutation s = Permutation::simple(n, i);
    auto& table = actions[static_cast<std::size_t>(i - 1)];
    for (std::uint32_t k = 0; k < rm.elements.size(); ++k) {
      const Permutation& w = rm.elements[k];
      const Permutation moved = side == Side::left ? s * w : w * s;
      const std::uint32_t t = rm.index.at(moved);
      table.push_back({lengths[t] > lengths[k] ? ActionKind::ascent : ActionKind::descent, t});
    }
  }
  rm.module = StandardModule(n, std::move(lengths), std::move(actions));
  return rm;
}

std::map<Permutation, HeckeElement> kl_basis(int n, int max_n) {
  if (n > max_n) {
    throw PreconditionError("kl_basis: n=" + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  }
  const RegularModule rm = regular_module(n, Side::left);
  const CanonicalBasis cb = canonical_basis(rm.module);
  std::map<Permutation, HeckeElement> out;
  for (std::uint32_t k = 0; k < rm.elements.size(); ++k) {
    HeckeElement h(n);
    for (const auto& [y, c] : cb.columns[k].entries) h.add(rm.elements[y], c);
    out.emplace(rm.elements[k], std::move(h));
  }
  return out;
}

}  // namespace ggraph
