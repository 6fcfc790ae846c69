#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ggraph/laurent.hpp"

namespace ggraph {

// Sparse vector over a module's standard basis, sorted by vertex index.
struct SparseVec {
  std::vector<std::pair<std::uint32_t, LaurentPoly>> entries;

  static SparseVec unit(std::uint32_t v) { return SparseVec{{{v, LaurentPoly(1)}}}; }
  bool is_zero() const { return entries.empty(); }
  // Coefficient of basis element v (zero if absent).
  LaurentPoly coeff(std::uint32_t v) const;
  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
SparseVec operator*(const LaurentPoly& c, const SparseVec& a);

// How H_{s_i} acts on a standard basis element B_v.
enum class ActionKind : std::uint8_t {
  ascent,         // H_s B_v = B_t, t above v
  descent,        // H_s B_v = B_t + (x - x^{-1}) B_v, t below v
  eigen_x,        // H_s B_v = x B_v
  eigen_neg_inv,  // H_s B_v = -x^{-1} B_v
};

struct Action {
  ActionKind kind;
  std::uint32_t target;  // equal to v for the eigen kinds
};

// Dense accumulator for building sparse vectors over a fixed vertex count.
class Accumulator {
 public:
  explicit Accumulator(std::size_t size) : slots_(size), used_(size, 0) {}
  void add(std::uint32_t v, const LaurentPoly& p, std::int64_t c = 1, int shift = 0);
  void add(const SparseVec& a, const LaurentPoly& c);
  // Emits the nonzero entries sorted by index and resets the accumulator.
  SparseVec take();

 private:
  std::vector<LaurentPoly> slots_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint8_t> used_;
};

// A free Z[x,x^{-1}]-module with standard basis {B_v} on which each H_{s_i}
// acts by one of the four rules in ActionKind. Vertices must be numbered so
// that ascent targets have larger index and strictly larger length.
class StandardModule {
 public:
  StandardModule() = default;
  // actions[i-1][v] describes H_{s_i} B_v for 1 <= i <= n-1.
  StandardModule(int n, std::vector<int> lengths, std::vector<std::vector<Action>> actions);

  int n() const { return n_; }
  std::size_t size() const { return lengths_.size(); }
  int length(std::uint32_t v) const { return lengths_[v]; }
  const Action& action(int i, std::uint32_t v) const { return actions_[static_cast<std::size_t>(i - 1)][v]; }
  // Bit i set iff H_{s_i} B_v is not x B_v (strict ascent or -x^{-1} eigenvalue).
  std::uint32_t tau(std::uint32_t v) const { return tau_[v]; }
  // Smallest (or largest) i with a strict descent at v; 0 if none.
  int strict_descent(std::uint32_t v, bool largest = false) const;

  // H_{s_i} * a
  SparseVec apply(int i, const SparseVec& a) const;
  // (H_{s_i} - (x - x^{-1})) * a, the image of bar(H_{s_i}).
  SparseVec apply_bar_generator(int i, const SparseVec& a) const;

  // The compatible bar operator fixing B_v whenever v has no strict descent.
  const SparseVec& bar_basis(std::uint32_t v) const { return bar_table_[v]; }
  SparseVec bar(const SparseVec& a) const;

 private:
  int n_ = 0;
  std::vector<int> lengths_;
  std::vector<std::vector<Action>> actions_;
  std::vector<std::uint32_t> tau_;
  std::vector<SparseVec> bar_table_;
};

struct MuEntry {
  std::uint32_t y;
  std::uint32_t z;
  std::int64_t mu;
  friend bool operator==(const MuEntry&, const MuEntry&) = default;
};

// A weighted arrow from -> to, as in a W-graph or a symmetrized mu table.
struct Edge {
  std::uint32_t from;
  std::uint32_t to;
  std::int64_t weight;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct CanonicalBasis {
  // columns[z] = sum over y of c_{yz} B_y.
  std::vector<SparseVec> columns;
  // Nonzero coefficients of x^{-1} in c_{yz}, y != z, sorted by (z, y).
  std::vector<MuEntry> mu;
};

enum class DescentChoice { smallest, largest };

struct CanonicalOptions {
  DescentChoice choice = DescentChoice::smallest;
  // Check bar(C_z) == C_z for every column. Unitriangularity is always checked.
  bool verify_bar = false;
};

// The unique bar-invariant basis C_z in B_z + sum x^{-1}Z[x^{-1}] B_y with
// length(y) < length(z). Throws std::logic_error if a check fails.
CanonicalBasis canonical_basis(const StandardModule& m, const CanonicalOptions& opts = {});

// omega(y, z) = mu(y, z) + mu(z, y) for every pair with a nonzero value,
// both orientations listed, sorted.
std::vector<Edge> omega(const std::vector<MuEntry>& mu);

}  // namespace ggraph
