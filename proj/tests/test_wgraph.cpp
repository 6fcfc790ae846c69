#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "ggraph/errors.hpp"
#include "ggraph/gelfand.hpp"
#include "ggraph/wgraph.hpp"
#include "dense.hpp"
#include "oracles.hpp"

using namespace ggraph;

namespace {

using dense::dense_axioms;
using dense::dense_trace_at_one;

Partition bfs_molecules(const WGraph& g) {
  std::vector<int> comp(g.size(), -1);
  Partition out;
  for (std::uint32_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::uint32_t> block;
    std::queue<std::uint32_t> todo;
    todo.push(s);
    comp[s] = static_cast<int>(out.size());
    while (!todo.empty()) {
      auto v = todo.front();
      todo.pop();
      block.push_back(v);
      for (std::uint32_t w = 0; w < g.size(); ++w) {
        if (comp[w] < 0 && g.omega(v, w) != 0 && g.omega(w, v) != 0) {
          comp[w] = static_cast<int>(out.size());
          todo.push(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(block);
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs(const WGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& e : g.edges) out.emplace_back(e.from, e.to);
  return out;
}

}  // namespace

TEST_CASE("small graphs") {
  const WGraph g1 = build_gamma(1, Variant::row, true);
  CHECK(g1.size() == 1);
  CHECK(g1.edges.empty());
  const WGraph g2 = build_gamma(2, Variant::row, true);
  REQUIRE(g2.size() == 2);
  CHECK(g2.label(0) == "2143");
  CHECK(g2.label(1) == "3412");
  CHECK(g2.edges.empty());
  const GelfandModule m3(3, Variant::row);
  const WGraph g3 = build_gamma(m3, m3.canonical_basis(), true);
  CHECK(g3.size() == 4);
  for (const auto& e : g3.edges) {
    if (g3.omega(e.to, e.from) != 0) CHECK(lambda_shape(m3.vertex(e.from)) == lambda_shape(m3.vertex(e.to)));
  }
}

TEST_CASE("reduced graphs drop edges into larger tau") {
  for (Variant v : {Variant::row, Variant::col}) {
    const WGraph r = build_gamma(5, v, true);
    const WGraph full = build_gamma(5, v, false);
    for (const auto& e : full.edges) {
      const bool keep = (r.tau[e.from] & ~r.tau[e.to]) != 0;
      CHECK((r.omega(e.from, e.to) != 0) == keep);
    }
    for (const auto& e : r.edges) CHECK(full.omega(e.from, e.to) == e.weight);
  }
}

TEST_CASE("W-graph relations, sparse and dense") {
  for (Variant v : {Variant::row, Variant::col}) {
    for (int n = 1; n <= 4; ++n) {
      for (bool reduced : {true, false}) {
        const WGraph g = build_gamma(n, v, reduced);
        CHECK(verify_axioms(g).ok());
        CHECK(dense_axioms(g));
      }
    }
    CHECK(verify_axioms(build_gamma(5, v, true)).ok());
    CHECK(verify_axioms(build_gamma(5, v, false)).ok());
  }
}

TEST_CASE("corrupted graph fails a named relation") {
  WGraph g = build_gamma(4, Variant::row, true);
  REQUIRE_FALSE(g.edges.empty());
  g.edges.front().weight += 1;
  const auto report = verify_axioms(g);
  REQUIRE_FALSE(report.ok());
  const auto& msg = report.failures.front();
  CHECK((msg.find("quadratic") != std::string::npos || msg.find("braid") != std::string::npos ||
         msg.find("commutation") != std::string::npos));
  CHECK_FALSE(dense_axioms(g));
}

TEST_CASE("graph action reproduces the module action on the canonical basis") {
  for (Variant v : {Variant::row, Variant::col}) {
    for (int n = 2; n <= 5; ++n) {
      const GelfandModule m(n, v);
      const CanonicalBasis cb = m.canonical_basis();
      const WGraph g = build_gamma(m, cb, true);
      for (int i = 1; i < n; ++i) {
        for (std::uint32_t z = 0; z < m.size(); ++z) {
          const SparseVec lhs = m.h_action(i, ModuleElement{v, cb.columns[z]}).coeffs;
          SparseVec rhs;
          if (!g.in_tau(z, i)) {
            rhs = LaurentPoly::x() * cb.columns[z];
          } else {
            rhs = -LaurentPoly::x_inv() * cb.columns[z];
            for (std::uint32_t y = 0; y < m.size(); ++y)
              if (!g.in_tau(y, i) && g.omega(z, y) != 0) rhs = rhs + LaurentPoly(g.omega(z, y)) * cb.columns[y];
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("molecules and cells against brute force") {
  for (Variant v : {Variant::row, Variant::col}) {
    for (int n = 1; n <= 5; ++n) {
      for (bool reduced : {true, false}) {
        const WGraph g = build_gamma(n, v, reduced);
        CHECK(molecules(g) == bfs_molecules(g));
        CHECK(cells(g).cells == oracle::scc(g.size(), arcs(g)));
      }
    }
  }
  const WGraph g2 = build_gamma(2, Variant::row, true);
  CHECK(molecules(g2) == Partition{{0}, {1}});
  CHECK(cells(g2).cells == Partition{{0}, {1}});
  const WGraph one = build_gamma(1, Variant::col, true);
  CHECK(cells(one).cells == Partition{{0}});
}

TEST_CASE("condensation order is acyclic and covers every crossing arc") {
  const WGraph g = build_gamma(5, Variant::row, false);
  const auto d = cells(g);
  std::vector<std::uint32_t> cell_of(g.size());
  for (std::uint32_t c = 0; c < d.cells.size(); ++c)
    for (auto v : d.cells[c]) cell_of[v] = c;
  std::set<std::pair<std::uint32_t, std::uint32_t>> order(d.order.begin(), d.order.end());
  for (const auto& e : g.edges) {
    if (cell_of[e.from] != cell_of[e.to]) CHECK(order.contains({cell_of[e.from], cell_of[e.to]}));
  }
  for (auto [a, b] : d.order) CHECK_FALSE(order.contains({b, a}));
}

TEST_CASE("molecules are lambda fibers") {
  for (Variant v : {Variant::row, Variant::col}) {
    for (int n = 1; n <= 5; ++n) {
      const GelfandModule m(n, v);
      const WGraph g = build_gamma(m, m.canonical_basis(), true);
      std::vector<Shape> keys;
      for (const auto& z : m.vertices()) keys.push_back(lambda_shape(z));
      CHECK(molecules(g) == partition_by(keys));
      CHECK(cells(g).cells == molecules(g));
    }
  }
}

TEST_CASE("combinatorial relation") {
  const GelfandModule m2(2, Variant::row);
  for (const auto& y : m2.vertices())
    for (const auto& z : m2.vertices()) CHECK_THROWS_AS(combinatorial_bidirected(y, z, 1), PreconditionError);
  const auto y = embed(Involution({2, 1, 3, 4}), Embedding::asc);
  const auto z = embed(Involution({3, 2, 1, 4}), Embedding::asc);
  CHECK(combinatorial_bidirected(y, z, 2));
  CHECK(combinatorial_bidirected(z, y, 2));
  CHECK_FALSE(combinatorial_bidirected(y, y, 2));
}

TEST_CASE("classification") {
  for (auto [n, v] : std::vector<std::pair<int, Variant>>{{3, Variant::row}, {4, Variant::col}, {6, Variant::row}}) {
    const auto r = classify(n, v);
    CHECK(r.ok());
    CHECK(r.fibers == oracle::partitions(n).size());
    CHECK(r.molecules == r.fibers);
    CHECK(r.algebraic_edges == r.combinatorial_edges);
  }
}

TEST_CASE("character") {
  for (int n = 1; n <= 4; ++n) {
    for (Variant v : {Variant::row, Variant::col}) {
      const WGraph g = build_gamma(n, v, true);
      CHECK(character_trace(g, Permutation::identity(n)) == static_cast<std::int64_t>(involution_count(n)));
      for (const auto& w : conjugacy_class_representatives(n)) {
        CHECK(character_trace(g, w) == dense_trace_at_one(g, w));
        CHECK(character_trace(g, w) == oracle::square_roots(w.word()));
        CHECK(square_root_count(w) == oracle::square_roots(w.word()));
      }
    }
  }
  const WGraph row4 = build_gamma(4, Variant::row, true);
  CHECK(character_trace(row4, Permutation::simple(4, 1)) == 0);
  const WGraph col4 = build_gamma(4, Variant::col, true);
  // A square root of a 4-cycle would have order 8.
  CHECK(character_trace(col4, Permutation({2, 3, 4, 1})) == 0);
  CHECK(conjugacy_class_representatives(5).size() == 7);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(build_gamma(1, Variant::row, true));
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 3);
  CHECK(dot.find("->") == std::string::npos);
  CHECK(dot.find("v0 [") != std::string::npos);
  CHECK(dot.find("v1") == std::string::npos);
}
