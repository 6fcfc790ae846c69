#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggraph/module.hpp"
#include "ggraph/perm.hpp"
#include "ggraph/tableau.hpp"

namespace ggraph {

enum class Embedding { asc, des };

// row: module M on G^asc_n with tau = Asc^row.
// col: module N on G^des_n with tau = Asc^col.
enum class Variant { row, col };

inline Embedding embedding_of(Variant v) { return v == Variant::row ? Embedding::asc : Embedding::des; }
const char* to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view text);

// A fixed-point-free involution of [2n] in G^asc_n or G^des_n.
struct GelfandVertex {
  Involution z;
  Embedding mode = Embedding::asc;

  int n() const { return z.size() / 2; }
  friend bool operator==(const GelfandVertex&, const GelfandVertex&) = default;
};

// iota_asc / iota_des: fixed points c_1 < ... < c_q of w go to n+i (asc) or
// n+q+1-i (des); the points above n+q are paired as (n+q+1, n+q+2), ...
GelfandVertex embed(const Involution& w, Embedding mode);
// The involution of [n] a vertex was embedded from.
Involution source(const GelfandVertex& v);

struct DescentData {
  std::vector<int> des_eq;
  std::vector<int> asc_eq;
  std::vector<int> des_lt;
  std::vector<int> asc_lt;
};

// Weak and strict descent/ascent sets of z in I^FPF_{2n} relative to [n-1].
DescentData descent_data(const Involution& z, int n);
inline DescentData descent_data(const GelfandVertex& v) { return descent_data(v.z, v.n()); }

// How H_{s_i} acts on the basis element of v in M (row) or N (col).
Action gelfand_action_kind(const GelfandVertex& v, int i, Variant variant);

// Asc^row(z) for asc vertices, Asc^col(z) for des vertices.
std::vector<int> tau(const GelfandVertex& v);

// i with z(i+1) < min(i, z(i)).
bool is_visible_descent(const Involution& z, int i);
// z fixed-point-free on [2n] with no visible descent greater than n.
bool satisfies_asc_criterion(const Involution& z, int n);

// i in [n] with z(i) > n.
std::vector<int> transfer_points(const GelfandVertex& v);
// P_rBS(z) (asc) or P_cBS(z) (des) restricted to [n].
Tableau hat_p(const GelfandVertex& v);
Shape lambda_shape(const GelfandVertex& v);
// iota_row (Variant::row) or iota_col (Variant::col) of a standard tableau.
Tableau iota_line(const Tableau& t, Variant direction);

struct ModuleElement {
  Variant variant = Variant::row;
  SparseVec coeffs;
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
};

// The module M (row) or N (col) of rank n, with basis indexed by its vertices
// in (length, lexicographic) order.
class GelfandModule {
 public:
  GelfandModule(int n, Variant variant);

  int n() const { return n_; }
  Variant variant() const { return variant_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<GelfandVertex>& vertices() const { return vertices_; }
  const GelfandVertex& vertex(std::uint32_t k) const { return vertices_[k]; }
  std::optional<std::uint32_t> index_of(const Involution& z) const;
  const StandardModule& module() const { return module_; }

  ModuleElement basis(std::uint32_t k) const { return {variant_, SparseVec::unit(k)}; }
  // H_{s_i} * e. Throws PreconditionError on a variant mismatch or bad i.
  ModuleElement h_action(int i, const ModuleElement& e) const;
  ModuleElement bar(const ModuleElement& e) const;
  CanonicalBasis canonical_basis(const CanonicalOptions& opts = {}) const;

 private:
  void check(const ModuleElement& e) const;

  int n_;
  Variant variant_;
  std::vector<GelfandVertex> vertices_;
  std::unordered_map<Permutation, std::uint32_t> index_;
  StandardModule module_;
};

}  // namespace ggraph
