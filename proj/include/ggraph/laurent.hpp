#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ggraph {

// Sparse integer Laurent polynomial in x. Terms are kept sorted by ascending
// exponent with no zero coefficients. Coefficient arithmetic is checked and
// throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  // The constant c.
  LaurentPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  // Sum of c * x^e over the given (e, c) pairs; duplicates are combined.
  LaurentPoly(std::initializer_list<std::pair<int, std::int64_t>> terms);

  static LaurentPoly monomial(std::int64_t coeff, int exp);
  static LaurentPoly x() { return monomial(1, 1); }
  static LaurentPoly x_inv() { return monomial(1, -1); }
  // x - x^{-1}
  static LaurentPoly x_minus_x_inv();

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exp) const;
  // True iff every exponent is <= -1 (the zero polynomial qualifies).
  bool in_neg_span() const;
  // x -> x^{-1}.
  LaurentPoly bar() const;
  std::int64_t eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& q);
  LaurentPoly& operator-=(const LaurentPoly& q);
  LaurentPoly& operator*=(const LaurentPoly& q);
  // this += c * x^shift * q
  void add_scaled(const LaurentPoly& q, std::int64_t c, int shift = 0);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
  friend LaurentPoly operator-(const LaurentPoly& p);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "x^-2 + 3 - x"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace ggraph
