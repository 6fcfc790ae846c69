#include <doctest.h>

#include <map>
#include <set>

#include "ggraph/beissinger.hpp"
#include "ggraph/errors.hpp"
#include "oracles.hpp"

using namespace ggraph;

namespace {

Tableau T(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }
Involution I(std::vector<int> w) { return Involution(std::move(w)); }

// The z with P(y) = D_i(P(z)), by search over all of I_n.
template <typename P>
std::vector<Involution> partner_search(const Involution& y, int i, P p) {
  std::vector<Involution> out;
  const Tableau target = p(y);
  for (const auto& z : enumerate_involutions(y.size()))
    if (dual_equiv(p(z), i) == target) out.push_back(z);
  return out;
}

}  // namespace

TEST_CASE("row Beissinger insertion") {
  // The definition gives [[2,3,5],[4]] here, consistent with
  // [[1,2,3],[4]] <-rBS (5,5) = [[1,2,3,5],[4]].
  CHECK(rbs_insert(T({{2, 3}, {4}}), 5, 5) == T({{2, 3, 5}, {4}}));
  CHECK(rbs_insert(T({{1, 2, 3}, {4}}), 5, 5) == T({{1, 2, 3, 5}, {4}}));
  CHECK(rbs_insert(T({{1, 3}, {4}}), 2, 5) == T({{1, 2}, {3}, {4}, {5}}));
  CHECK(rbs_insert(T({{1, 4, 6}, {3}}), 2, 5) == T({{1, 2, 6}, {3, 4}, {5}}));
  CHECK_THROWS_AS(rbs_insert(T({{1, 3}}), 3, 5), PreconditionError);
  CHECK_THROWS_AS(rbs_insert(T({{1, 3}}), 5, 2), PreconditionError);
}

TEST_CASE("column Beissinger insertion") {
  CHECK(cbs_insert(T({{2, 3}, {4}}), 5, 5) == T({{2, 3}, {4}, {5}}));
  CHECK(cbs_insert(T({{1, 4}, {3}}), 2, 5) == T({{1, 2, 5}, {3, 4}}));
  // 6 sits above 5, so only the unchecked filling exists.
  using Rows = std::vector<std::vector<int>>;
  CHECK(cbs_insert_filling(T({{1, 4, 6}, {3}}), 2, 5) == Rows{{1, 2, 6}, {3, 4, 5}});
  CHECK_THROWS_AS(cbs_insert(T({{1, 4, 6}, {3}}), 2, 5), PreconditionError);
  CHECK(cbs_insert(T({{1, 2, 3}, {4}}), 5, 5) == T({{1, 2, 3}, {4}, {5}}));
  CHECK(rbs_insert_filling(T({{2, 3}, {4}}), 5, 5) == Rows{{2, 3, 5}, {4}});
  CHECK(cbs_insert(T({{2, 3}, {4}}), 5, 5, CbsVariant::transposed) ==
        transpose(cbs_insert(transpose(T({{2, 3}, {4}})), 5, 5)));
}

TEST_CASE("P maps") {
  CHECK(p_rbs(I({4, 2, 3, 1})) == T({{1, 3}, {2}, {4}}));
  CHECK(p_rbs(I({1})) == T({{1}}));
  CHECK(p_rbs(I({2, 1})) == T({{1}, {2}}));
  CHECK(p_cbs(I({4, 2, 3, 1})) == T({{1, 4}, {2}, {3}}));
  CHECK(p_cbs(Involution::identity(3)) == T({{1}, {2}, {3}}));
  // (1,2) then (3,4): 3 lands in column 3 of the first row and 4 follows it.
  CHECK(p_cbs(I({2, 1, 4, 3})) == T({{1, 2, 3, 4}}));
  CHECK(p_cbs(I({3, 4, 1, 2})) == T({{1, 2}, {3, 4}}));
}

TEST_CASE("inverse P maps") {
  CHECK(p_cbs_inverse(T({{1, 4}, {2}, {3}})) == I({4, 2, 3, 1}));
  CHECK(p_cbs_inverse(T({{1}, {2}, {3}})) == Involution::identity(3));
  CHECK(p_cbs_inverse(T({{1, 2, 3}, {4}})) == I({1, 3, 2, 4}));
  CHECK(p_rbs_inverse(T({{1, 3}, {2}, {4}})) == I({4, 2, 3, 1}));
  CHECK(p_rbs_inverse(T({{1}})) == I({1}));
  CHECK(p_rbs_inverse(T({{1, 2}, {3, 4}})) == I({3, 4, 1, 2}));
  CHECK_THROWS_AS(p_rbs_inverse(T({{1, 3}})), PreconditionError);

  // Matching against forward insertion over all of I_n.
  for (int n = 1; n <= 6; ++n) {
    std::map<Tableau, Involution> rows, cols;
    for (const auto& y : enumerate_involutions(n)) {
      rows.emplace(p_rbs(y), y);
      cols.emplace(p_cbs(y), y);
    }
    for (const auto& [t, y] : rows) CHECK(p_rbs_inverse(t) == y);
    for (const auto& [t, y] : cols) CHECK(p_cbs_inverse(t) == y);
  }
}

TEST_CASE("bijections with fixed-point refinement") {
  for (int n = 1; n <= 7; ++n) {
    std::map<int, std::int64_t> by_fixed, by_odd_col, by_odd_row;
    std::set<Tableau> rows, cols;
    for (const auto& y : enumerate_involutions(n)) {
      by_fixed[y.fixed_point_count()]++;
      rows.insert(p_rbs(y));
      cols.insert(p_cbs(y));
      CHECK(p_rbs(y) == pq_rs(y.perm()).first);
    }
    for (const auto& s : oracle::partitions(n)) {
      by_odd_col[oracle::odd_parts(oracle::conjugate(s))] += oracle::syt_count(s);
      by_odd_row[oracle::odd_parts(s)] += oracle::syt_count(s);
    }
    CHECK(by_fixed == by_odd_col);
    CHECK(by_fixed == by_odd_row);
    CHECK(rows.size() == standard_tableaux(n).size());
    CHECK(cols.size() == standard_tableaux(n).size());
  }
}

TEST_CASE("Psi") {
  CHECK(psi(I({3, 2, 1, 4})) == I({1, 3, 2, 4}));
  CHECK(psi(I({1, 3, 2, 4})) == I({3, 2, 1, 4}));
  CHECK(psi(I({2, 1, 4, 3})) == I({3, 4, 1, 2}));
  CHECK(psi(Involution::identity(4)) == Involution::identity(4));
  const auto orbit = psi_orbit(I({4, 2, 3, 1}));
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[1] == I({1, 4, 3, 2}));
  CHECK(orbit[2] == I({1, 2, 4, 3}));

  // Commutes with the inclusion I_n -> I_{n+1}.
  for (const auto& y : enumerate_involutions(5)) {
    auto w = y.word();
    auto z = psi(y).word();
    w.push_back(6);
    z.push_back(6);
    CHECK(psi(Involution(w)).word() == z);
  }
}

TEST_CASE("Psi statistics") {
  const auto s1 = psi_cycle_stats(1);
  CHECK(s1.longest_cycle == 1);
  CHECK(s1.fixed_points == std::vector<Involution>{Involution::identity(1)});
  const auto s5 = psi_cycle_stats(5);
  CHECK(s5.longest_cycle == 12);
  CHECK(s5.fixed_points == std::vector<Involution>{Involution::identity(5), Involution(Permutation::simple(5, 1))});
  CHECK(psi_orbit(s5.longest_representative).size() == 12);
}

TEST_CASE("partner formulas") {
  CHECK(simrbs_partner(I({4, 2, 3, 1}), 3) == I({3, 2, 1, 4}));
  CHECK(simrbs_partner(I({4, 2, 3, 1}), 2) == I({1, 4, 3, 2}));
  CHECK(simrbs_partner(Involution::identity(3), 2) == Involution::identity(3));
  CHECK(simcbs_partner(I({4, 2, 3, 1}), 2) == I({4, 2, 3, 1}));
  CHECK(simcbs_partner(I({4, 2, 3, 1}), 3) == I({3, 2, 1, 4}));
  CHECK(p_cbs(I({3, 2, 1, 4})) == T({{1, 3}, {2}, {4}}));
  CHECK(simcbs_partner(Involution::identity(3), 2) == Involution::identity(3));
  CHECK_THROWS_AS(simrbs_partner(Involution::identity(3), 1), PreconditionError);
  CHECK_THROWS_AS(simcbs_partner(Involution::identity(3), 3), PreconditionError);

  for (int n = 3; n <= 6; ++n) {
    for (const auto& y : enumerate_involutions(n)) {
      for (int i = 2; i < n; ++i) {
        const auto r = partner_search(y, i, p_rbs);
        const auto c = partner_search(y, i, p_cbs);
        REQUIRE(r.size() == 1);
        REQUIRE(c.size() == 1);
        CHECK(simrbs_partner(y, i) == r.front());
        CHECK(simcbs_partner(y, i) == c.front());
        CHECK(simrbs_partner(simrbs_partner(y, i), i) == y);
        CHECK(simcbs_partner(simcbs_partner(y, i), i) == y);
      }
    }
  }
}
