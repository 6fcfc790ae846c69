#include <doctest.h>

#include <set>

#include "ggraph/errors.hpp"
#include "ggraph/perm.hpp"
#include "ggraph/tableau.hpp"
#include "oracles.hpp"

using namespace ggraph;

namespace {
Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
}  // namespace

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(T({{2, 1}}), PreconditionError);
  CHECK_THROWS_AS(T({{1, 2}, {1}}), PreconditionError);
  CHECK_THROWS_AS(T({{1}, {2, 3}}), PreconditionError);
  CHECK_THROWS_AS(T({{3, 4}, {2}}), PreconditionError);
  CHECK_NOTHROW(T({{1, 4, 6}, {3}}));
  CHECK(T({{1, 3}, {2}}).is_standard());
  CHECK_FALSE(T({{1, 4}, {3}}).is_standard());
}

TEST_CASE("row insertion") {
  auto r = rs_insert(T({{1, 5}, {3, 6}, {4}}), 2);
  CHECK(r.tableau == T({{1, 2}, {3, 5}, {4, 6}}));
  CHECK(r.path.cells == std::vector<Cell>{{1, 2}, {2, 2}, {3, 2}});
  CHECK(r.path.inserted_values == std::vector<int>{2, 5, 6});
  CHECK(rs_insert(T({{1, 3}, {4}}), 2).tableau == T({{1, 2}, {3}, {4}}));
  CHECK(rs_insert(Tableau(), 5).tableau == T({{5}}));
  CHECK_THROWS_AS(rs_insert(T({{1, 3}}), 3), PreconditionError);
}

TEST_CASE("column insertion is transposed row insertion") {
  for (const auto& t : standard_tableaux(5)) {
    CHECK(column_insert(t, 6).tableau == transpose(rs_insert(transpose(t), 6).tableau));
  }
}

TEST_CASE("inverse insertion") {
  auto [u, x] = rs_uninsert(T({{1, 2}, {3, 5}, {4, 6}}), {3, 2});
  CHECK(u == T({{1, 5}, {3, 6}, {4}}));
  CHECK(x == 2);
  auto [e, five] = rs_uninsert(T({{5}}), {1, 1});
  CHECK(e.empty());
  CHECK(five == 5);
  auto [v, two] = rs_uninsert(T({{1, 2}, {3}, {4}}), {3, 1});
  CHECK(v == T({{1, 3}, {4}}));
  CHECK(two == 2);
  CHECK_THROWS_AS(rs_uninsert(T({{1, 2}, {3}}), {1, 1}), PreconditionError);
  for (const auto& s : standard_tableaux(5)) {
    auto rows = s.rows();
    for (auto& r : rows)
      for (int& v : r) v *= 2;
    const Tableau t(rows);
    for (int a = 1; a <= 11; a += 2) {
      auto ins = rs_insert(t, a);
      CHECK(rs_uninsert(ins.tableau, ins.path.cells.back()) == std::make_pair(t, a));
      auto col = column_insert(t, a);
      CHECK(column_uninsert(col.tableau, col.path.cells.back()) == std::make_pair(t, a));
    }
  }
}

TEST_CASE("RS correspondence") {
  auto [p, q] = pq_rs(Permutation({3, 1, 4, 2, 5}));
  CHECK(p == T({{1, 2, 5}, {3, 4}}));
  CHECK(q == T({{1, 3, 5}, {2, 4}}));
  auto [p2, q2] = pq_rs(Permutation({2, 4, 1, 3, 5}));
  CHECK(p2 == T({{1, 3, 5}, {2, 4}}));
  CHECK(q2 == T({{1, 2, 5}, {3, 4}}));
  CHECK(pq_rs(Permutation({1, 2, 3})).first == T({{1, 2, 3}}));

  // Bijection onto pairs of equal shape; P(w^{-1}) = Q(w).
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> seen;
    for (const auto& w : oracle::all_perms(n)) {
      auto pq = pq_rs(Permutation(w));
      CHECK(pq.first.shape() == pq.second.shape());
      CHECK(pq_rs(Permutation(w).inverse()).first == pq.second);
      seen.insert(pq);
    }
    CHECK(seen.size() == oracle::all_perms(n).size());
  }
}

TEST_CASE("Knuth moves preserve P, dual Knuth moves preserve Q") {
  for (const auto& w : oracle::all_perms(5)) {
    Permutation p(w);
    for (int i = 2; i < 5; ++i) {
      CHECK(pq_rs(knuth_move(p, i, false)).first == pq_rs(p).first);
      CHECK(pq_rs(knuth_move(p, i, true)).second == pq_rs(p).second);
    }
  }
}

TEST_CASE("reading word") {
  CHECK(reading_word(T({{1, 2, 5}, {3, 4}})) == std::vector<int>{3, 4, 1, 2, 5});
  CHECK(reading_word(T({{1, 2, 3}})) == std::vector<int>{1, 2, 3});
  CHECK(reading_word(T({{1}, {2}, {3}})) == std::vector<int>{3, 2, 1});
}

TEST_CASE("dual equivalence") {
  CHECK(dual_equiv(T({{1, 3, 5}, {2, 4}}), 4) == T({{1, 3, 4}, {2, 5}}));
  CHECK(dual_equiv(T({{1, 3, 4}, {2, 5}}), 3) == T({{1, 3, 4}, {2, 5}}));
  CHECK(dual_equiv(T({{1, 2, 5}, {3, 4}}), 2) == T({{1, 3, 5}, {2, 4}}));
  for (int n = 3; n <= 7; ++n) {
    for (const auto& t : standard_tableaux(n)) {
      for (int i = 2; i < n; ++i) {
        const Tableau d = dual_equiv(t, i);
        CHECK(d.rows() == oracle::dual_equiv(t.rows(), i));
        CHECK(dual_equiv(d, i) == t);
      }
    }
  }
}

TEST_CASE("transpose and restriction") {
  CHECK(transpose(T({{1, 2}, {3}})) == T({{1, 3}, {2}}));
  CHECK(transpose(Tableau()).empty());
  CHECK(transpose(T({{1, 2, 3}, {4}})) == T({{1, 4}, {2}, {3}}));
  const std::vector<int> keep{1, 2, 3};
  CHECK(restrict(T({{1, 2, 9}, {3, 5}}), keep) == T({{1, 2}, {3}}));
  const Tableau t = T({{1, 3, 4}, {2, 5}});
  CHECK(restrict(t, t.entries()) == t);
  const std::vector<int> top{1, 2};
  CHECK(restrict(T({{1, 2}, {3, 4}}), top) == T({{1, 2}}));
  const std::vector<int> bad{1, 4};
  CHECK_THROWS_AS(restrict(T({{1, 2}, {3, 4}}), bad), PreconditionError);
  CHECK(restrict_to_initial(T({{1, 2, 5}, {3, 4}}), 3) == T({{1, 2}, {3}}));
}

TEST_CASE("odd lines") {
  CHECK(odd_lines(T({{1, 2, 3, 4}, {5, 7}, {6}}), LineDirection::columns) == 3);
  CHECK(odd_lines(T({{1, 2, 3}, {4, 5}, {6}, {7}}), LineDirection::rows) == 3);
  CHECK(odd_lines(Tableau(), LineDirection::rows) == 0);
  for (const auto& s : oracle::partitions(7)) {
    CHECK(odd_lines(s, LineDirection::rows) == oracle::odd_parts(s));
    CHECK(conjugate(s) == oracle::conjugate(s));
    CHECK(odd_lines(s, LineDirection::columns) == oracle::odd_parts(oracle::conjugate(s)));
  }
}

TEST_CASE("standard tableaux counts") {
  for (int n = 1; n <= 8; ++n) {
    std::int64_t total = 0;
    for (const auto& s : oracle::partitions(n)) total += oracle::syt_count(s);
    auto all = standard_tableaux(n);
    CHECK(static_cast<std::int64_t>(all.size()) == total);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& t : all) CHECK(t.is_standard());
  }
  CHECK(to_string(T({{1, 2}, {3}})) == "[[1,2],[3]]");
  CHECK(to_string(Shape{3, 1}) == "(3,1)");
}
