#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "ggraph/laurent.hpp"
#include "ggraph/module.hpp"
#include "ggraph/perm.hpp"

namespace ggraph {

// Element of the Iwahori-Hecke algebra of S_n in the standard basis {H_w}.
class HeckeElement {
 public:
  HeckeElement() = default;
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement basis(const Permutation& w, LaurentPoly c = LaurentPoly(1));

  int n() const { return n_; }
  const std::map<Permutation, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const Permutation& w) const;
  bool is_zero() const { return terms_.empty(); }
  void add(const Permutation& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& h);
  HeckeElement& operator-=(const HeckeElement& h);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

 private:
  int n_ = 0;
  std::map<Permutation, LaurentPoly> terms_;
};

// H_{s_i} * h.
HeckeElement h_s_mul(int i, const HeckeElement& h);
// The bar involution, through bar(H_w) = prod (H_s - (x - x^{-1})) over a reduced word.
HeckeElement h_bar(const HeckeElement& h);

enum class Side { left, right };

// The regular module of H(S_n) acting on the left (H_s H_w) or on the right
// (H_w H_s), on the basis S_n in (length, lexicographic) order.
struct RegularModule {
  int n = 0;
  Side side = Side::left;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, std::uint32_t> index;
  StandardModule module;
};

RegularModule regular_module(int n, Side side);

// KL basis element for each w, keyed by w. Throws PreconditionError if n > max_n.
std::map<Permutation, HeckeElement> kl_basis(int n, int max_n = 6);

}  // namespace ggraph
