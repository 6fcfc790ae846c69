#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ggraph/gelfand.hpp"
#include "ggraph/hecke.hpp"
#include "ggraph/module.hpp"

namespace ggraph {

// A W-graph (V, omega, tau) for S_n. Edge v -> w carries omega(v, w).
struct WGraph {
  int n = 0;
  // "row", "col", "kl-left", "kl-right", ...
  std::string variant;
  bool reduced = true;
  // One-line words of the vertices.
  std::vector<std::vector<int>> vertices;
  // Bit i set iff s_i is in tau(v).
  std::vector<std::uint32_t> tau;
  // Nonzero weights, sorted by (from, to).
  std::vector<Edge> edges;

  std::size_t size() const { return vertices.size(); }
  std::int64_t omega(std::uint32_t from, std::uint32_t to) const;
  bool in_tau(std::uint32_t v, int i) const { return (tau[v] >> i & 1U) != 0; }
  // "214365", or comma-separated once a letter exceeds 9.
  std::string label(std::uint32_t v) const;
  friend bool operator==(const WGraph&, const WGraph&) = default;
};

// Graph with omega = mu(y,z) + mu(z,y) from a canonical basis. If `reduced`,
// drops omega(v,w) whenever tau(v) is a subset of tau(w).
WGraph make_wgraph(const StandardModule& m, const CanonicalBasis& basis, std::vector<std::vector<int>> words,
                   std::string variant, bool reduced);

WGraph build_gamma(const GelfandModule& module, const CanonicalBasis& basis, bool reduced);
WGraph build_gamma(int n, Variant variant, bool reduced);
WGraph kl_graph(int n, Side side, bool reduced = true);

struct AxiomReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Checks the quadratic, braid and commutation relations for the matrices of
// H_{s_i} defined by the graph.
AxiomReport verify_axioms(const WGraph& g);

// Each block sorted, blocks ordered by least element.
using Partition = std::vector<std::vector<std::uint32_t>>;

// Connected components of the bidirected edges.
Partition molecules(const WGraph& g);

struct CellDecomposition {
  Partition cells;
  // Arrows between distinct cells (indices into `cells`), sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
};

// Strongly connected components of v -> w for omega(v, w) != 0.
CellDecomposition cells(const WGraph& g);

// Groups indices by key; blocks ordered by least element.
template <typename Key>
Partition partition_by(const std::vector<Key>& keys);

// The relation y <->_i z (row relation for asc vertices, col relation for
// des vertices). Requires 1 < i < n and matching embeddings.
bool combinatorial_bidirected(const GelfandVertex& y, const GelfandVertex& z, int i);

// Left or right cells of S_n, elements indexed as in regular_module(n, side).
Partition kl_cells(int n, Side side, int max_n = 6);

// Trace at x = 1 of the action of w (via its lexicographically first reduced word).
std::int64_t character_trace(const WGraph& g, const Permutation& w);
// #{g in S_n : g^2 = w}, by brute force.
std::int64_t square_root_count(const Permutation& w);
bool character_check(const WGraph& g, const Permutation& w);
// One permutation per cycle type, with cycles on consecutive letters.
std::vector<Permutation> conjugacy_class_representatives(int n);

struct ClassifyReport {
  int n = 0;
  Variant variant = Variant::row;
  std::size_t vertices = 0;
  std::size_t fibers = 0;
  std::size_t molecules = 0;
  std::size_t cells = 0;
  std::size_t algebraic_edges = 0;
  std::size_t combinatorial_edges = 0;
  bool molecules_are_fibers = false;
  bool edges_match = false;
  bool cells_are_molecules = false;
  // Whether the non-reduced graph has the same cells as the reduced one.
  // Informational; does not affect ok().
  bool nonreduced_cells_agree = false;
  std::size_t nonreduced_cells = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return molecules_are_fibers && edges_match && cells_are_molecules; }
};

ClassifyReport classify(const GelfandModule& module, const CanonicalBasis& basis);
ClassifyReport classify(int n, Variant variant);

// Graphviz rendering; `extra` (if non-empty) is appended to each vertex label.
std::string to_dot(const WGraph& g, const std::vector<std::string>& extra = {});

template <typename Key>
Partition partition_by(const std::vector<Key>& keys) {
  std::map<Key, std::size_t> block_of;
  Partition out;
  for (std::uint32_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = block_of.try_emplace(keys[v], out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

}  // namespace ggraph
