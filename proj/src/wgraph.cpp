#include "ggraph/wgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ggraph/errors.hpp"
#include "ggraph/tableau.hpp"

namespace ggraph {

namespace {

bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> out_adjacency(const WGraph& g) {
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj(g.size());
  for (const auto& e : g.edges) adj[e.from].emplace_back(e.to, e.weight);
  return adj;
}

// Matrix of H_{s_i} as columns: column v is H_{s_i} Y_v.
std::vector<SparseVec> generator_columns(const WGraph& g, int i) {
  const auto adj = out_adjacency(g);
  std::vector<SparseVec> cols(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (!g.in_tau(v, i)) {
      cols[v] = SparseVec{{{v, LaurentPoly::x()}}};
      continue;
    }
    std::vector<std::pair<std::uint32_t, LaurentPoly>> raw{{v, LaurentPoly::monomial(-1, -1)}};
    for (auto [w, weight] : adj[v]) {
      if (!g.in_tau(w, i)) raw.emplace_back(w, LaurentPoly(weight));
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    cols[v] = SparseVec{std::move(raw)};
  }
  return cols;
}

SparseVec apply_columns(const std::vector<SparseVec>& cols, const SparseVec& a, Accumulator& acc) {
  for (const auto& [v, c] : a.entries) acc.add(cols[v], c);
  return acc.take();
}

}  // namespace

std::string WGraph::label(std::uint32_t v) const { return to_oneline(Permutation(vertices[v])); }

std::int64_t WGraph::omega(std::uint32_t from, std::uint32_t to) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{from, to, 0},
                             [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
  return it != edges.end() && it->from == from && it->to == to ? it->weight : 0;
}

WGraph make_wgraph(const StandardModule& m, const CanonicalBasis& basis, std::vector<std::vector<int>> words,
                   std::string variant, bool reduced) {
  WGraph g;
  g.n = m.n();
  g.variant = std::move(variant);
  g.reduced = reduced;
  g.vertices = std::move(words);
  for (std::uint32_t v = 0; v < m.size(); ++v) g.tau.push_back(m.tau(v));
  for (const Edge& e : omega(basis.mu)) {
    if (reduced && subset(g.tau[e.from], g.tau[e.to])) continue;
    g.edges.push_back(e);
  }
  return g;
}

WGraph build_gamma(const GelfandModule& module, const CanonicalBasis& basis, bool reduced) {
  std::vector<std::vector<int>> words;
  for (const auto& v : module.vertices()) words.push_back(v.z.word());
  return make_wgraph(module.module(), basis, std::move(words), to_string(module.variant()), reduced);
}

WGraph build_gamma(int n, Variant variant, bool reduced) {
  const GelfandModule module(n, variant);
  return build_gamma(module, module.canonical_basis(), reduced);
}

WGraph kl_graph(int n, Side side, bool reduced) {
  const RegularModule rm = regular_module(n, side);
  std::vector<std::vector<int>> words;
  for (const auto& w : rm.elements) words.push_back(w.word());
  return make_wgraph(rm.module, canonical_basis(rm.module), std::move(words),
                     side == Side::left ? "kl-left" : "kl-right", reduced);
}

AxiomReport verify_axioms(const WGraph& g) {
  AxiomReport report;
  const int n = g.n;
  std::vector<std::vector<SparseVec>> rho(static_cast<std::size_t>(std::max(n, 1)));
  for (int i = 1; i < n; ++i) rho[static_cast<std::size_t>(i)] = generator_columns(g, i);
  Accumulator acc(g.size());
  auto act = [&](int i, const SparseVec& a) { return apply_columns(rho[static_cast<std::size_t>(i)], a, acc); };
  const LaurentPoly q = LaurentPoly::x_minus_x_inv();

  for (int i = 1; i < n; ++i) {
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      const SparseVec e = SparseVec::unit(v);
      const SparseVec once = act(i, e);
      if (act(i, once) != e + q * once) {
        report.failures.push_back("quadratic relation for s_" + std::to_string(i) + " fails at vertex " +
                                  g.label(v));
        break;
      }
    }
    for (int j = i + 1; j < n; ++j) {
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        const SparseVec e = SparseVec::unit(v);
        bool holds = false;
        if (j == i + 1) {
          holds = act(i, act(j, act(i, e))) == act(j, act(i, act(j, e)));
        } else {
          holds = act(i, act(j, e)) == act(j, act(i, e));
        }
        if (!holds) {
          report.failures.push_back(std::string(j == i + 1 ? "braid" : "commutation") + " relation for s_" +
                                    std::to_string(i) + ", s_" + std::to_string(j) + " fails at vertex " +
                                    g.label(v));
          break;
        }
      }
    }
  }
  return report;
}

Partition molecules(const WGraph& g) {
  std::vector<std::uint32_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges) {
    if (e.from < e.to && g.omega(e.to, e.from) != 0) {
      const auto a = find(e.from);
      const auto b = find(e.to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> root(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) root[v] = find(v);
  return partition_by(root);
}

CellDecomposition cells(const WGraph& g) {
  // Iterative Tarjan.
  const auto adj = out_adjacency(g);
  const std::size_t size = g.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> index(size, kUnset), low(size, 0), comp(size, kUnset);
  std::vector<std::uint8_t> on_stack(size, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;
  std::uint32_t counter = 0;
  std::uint32_t num_comps = 0;

  for (std::uint32_t root = 0; root < size; ++root) {
    if (index[root] != kUnset) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kUnset) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (next < adj[v].size()) {
        const std::uint32_t w = adj[v][next++].first;
        if (index[w] == kUnset) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = num_comps;
        } while (w != v);
        ++num_comps;
      }
      const std::uint32_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  CellDecomposition out;
  out.cells = partition_by(comp);
  std::vector<std::uint32_t> renumber(num_comps);
  for (std::uint32_t c = 0; c < out.cells.size(); ++c) renumber[comp[out.cells[c].front()]] = c;
  std::set<std::pair<std::uint32_t, std::uint32_t>> arrows;
  for (const auto& e : g.edges) {
    const auto a = renumber[comp[e.from]];
    const auto b = renumber[comp[e.to]];
    if (a != b) arrows.emplace(a, b);
  }
  out.order.assign(arrows.begin(), arrows.end());
  return out;
}

bool combinatorial_bidirected(const GelfandVertex& y, const GelfandVertex& z, int i) {
  if (y.mode != z.mode || y.n() != z.n()) throw PreconditionError("vertices come from different Gelfand sets");
  if (i <= 1 || i >= y.n()) throw PreconditionError("index must satisfy 1 < i < n");
  const bool row = y.mode == Embedding::asc;
  auto holds = [&](const Involution& a, const Involution& b, int s, int t) {
    const ConjOrder sa = conj_compare(a, s);
    const bool first = row ? sa != ConjOrder::higher : sa == ConjOrder::lower;
    if (!first || conj_compare(a, t) != ConjOrder::higher || conj_by_s(a, t) != b) return false;
    const ConjOrder sb = conj_compare(b, s);
    return row ? sb == ConjOrder::higher : sb != ConjOrder::lower;
  };
  for (auto [s, t] : {std::pair(i - 1, i), std::pair(i, i - 1)}) {
    if (holds(y.z, z.z, s, t) || holds(z.z, y.z, s, t)) return true;
  }
  return false;
}

Partition kl_cells(int n, Side side, int max_n) {
  if (n > max_n) {
    throw PreconditionError("kl_cells: n=" + std::to_string(n) + " exceeds the bound " + std::to_string(max_n));
  }
  return cells(kl_graph(n, side, true)).cells;
}

std::int64_t character_trace(const WGraph& g, const Permutation& w) {
  if (w.size() != g.n) throw PreconditionError("permutation size does not match the graph");
  const auto word = reduced_word(w);
  const auto adj = out_adjacency(g);
  std::int64_t trace = 0;
  std::vector<std::int64_t> vec(g.size()), next(g.size());
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    std::fill(vec.begin(), vec.end(), 0);
    vec[v] = 1;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const int i = *it;
      std::fill(next.begin(), next.end(), 0);
      for (std::uint32_t u = 0; u < g.size(); ++u) {
        const std::int64_t c = vec[u];
        if (c == 0) continue;
        if (!g.in_tau(u, i)) {
          next[u] = checked::add(next[u], c);
          continue;
        }
        next[u] = checked::add(next[u], -c);
        for (auto [t, weight] : adj[u]) {
          if (!g.in_tau(t, i)) next[t] = checked::add(next[t], checked::mul(weight, c));
        }
      }
      std::swap(vec, next);
    }
    trace = checked::add(trace, vec[v]);
  }
  return trace;
}

std::int64_t square_root_count(const Permutation& w) {
  std::vector<int> word(static_cast<std::size_t>(w.size()));
  std::iota(word.begin(), word.end(), 1);
  std::int64_t count = 0;
  do {
    const Permutation g(word);
    if (g * g == w) ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  return count;
}

bool character_check(const WGraph& g, const Permutation& w) { return character_trace(g, w) == square_root_count(w); }

std::vector<Permutation> conjugacy_class_representatives(int n) {
  std::vector<Permutation> out;
  std::vector<int> parts;
  auto emit = [&]() {
    std::vector<int> word;
    int start = 1;
    for (int len : parts) {
      for (int k = 0; k < len; ++k) word.push_back(start + (k + 1) % len);
      start += len;
    }
    out.emplace_back(std::move(word));
  };
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

ClassifyReport classify(const GelfandModule& module, const CanonicalBasis& basis) {
  ClassifyReport r;
  r.n = module.n();
  r.variant = module.variant();
  r.vertices = module.size();

  const WGraph g = build_gamma(module, basis, true);
  std::vector<Shape> shapes;
  for (const auto& v : module.vertices()) shapes.push_back(lambda_shape(v));
  Partition fibers = partition_by(shapes);
  Partition mols = molecules(g);
  const CellDecomposition dec = cells(g);
  r.fibers = fibers.size();
  r.molecules = mols.size();
  r.cells = dec.cells.size();
  r.molecules_are_fibers = mols == fibers;
  r.cells_are_molecules = dec.cells == mols;

  std::set<std::pair<std::uint32_t, std::uint32_t>> algebraic;
  for (const auto& e : g.edges) {
    if (e.from < e.to && g.omega(e.to, e.from) != 0) algebraic.emplace(e.from, e.to);
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> combinatorial;
  for (std::uint32_t y = 0; y < module.size(); ++y) {
    for (int j = 1; j < module.n(); ++j) {
      const auto z = module.index_of(conj_by_s(module.vertex(y).z, j));
      if (!z || *z <= y) continue;
      for (int i = 2; i < module.n(); ++i) {
        if (combinatorial_bidirected(module.vertex(y), module.vertex(*z), i)) {
          combinatorial.emplace(y, *z);
          break;
        }
      }
    }
  }
  r.algebraic_edges = algebraic.size();
  r.combinatorial_edges = combinatorial.size();
  r.edges_match = algebraic == combinatorial;

  const WGraph full = build_gamma(module, basis, false);
  const CellDecomposition full_dec = cells(full);
  r.nonreduced_cells = full_dec.cells.size();
  r.nonreduced_cells_agree = full_dec.cells == dec.cells;

  auto describe = [&](const char* what, const std::vector<std::uint32_t>& block) {
    std::string s = std::string(what) + ":";
    for (std::size_t k = 0; k < block.size() && k < 8; ++k) s += " " + g.label(block[k]);
    if (block.size() > 8) s += " ...";
    r.counterexamples.push_back(std::move(s));
  };
  if (!r.molecules_are_fibers) {
    for (const auto& m : mols) {
      if (std::find(fibers.begin(), fibers.end(), m) == fibers.end()) describe("molecule is not a fiber", m);
    }
  }
  if (!r.cells_are_molecules) {
    for (const auto& c : dec.cells) {
      if (std::find(mols.begin(), mols.end(), c) == mols.end()) describe("cell is not a molecule", c);
    }
  }
  if (!r.edges_match) {
    for (const auto& [a, b] : algebraic) {
      if (!combinatorial.contains({a, b})) describe("algebraic edge without combinatorial match", {a, b});
    }
    for (const auto& [a, b] : combinatorial) {
      if (!algebraic.contains({a, b})) describe("combinatorial edge without algebraic match", {a, b});
    }
  }
  return r;
}

ClassifyReport classify(int n, Variant variant) {
  const GelfandModule module(n, variant);
  return classify(module, module.canonical_basis());
}

std::string to_dot(const WGraph& g, const std::vector<std::string>& extra) {
  std::ostringstream out;
  out << "digraph \"" << g.variant << "_" << g.n << "\" {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    out << "  v" << v << " [label=\"" << g.label(v);
    if (v < extra.size() && !extra[v].empty()) out << "\\n" << extra[v];
    out << "\"];\n";
  }
  for (const auto& e : g.edges) {
    const std::int64_t back = g.omega(e.to, e.from);
    if (back != 0) {
      if (e.from > e.to) continue;
      out << "  v" << e.from << " -> v" << e.to << " [dir=both, label=\"";
      if (back == e.weight) {
        out << e.weight;
      } else {
        out << e.weight << "/" << back;
      }
      out << "\"];\n";
    } else {
      out << "  v" << e.from << " -> v" << e.to << " [style=dashed, label=\"" << e.weight << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace ggraph
