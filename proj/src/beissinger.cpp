#include "ggraph/beissinger.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "ggraph/errors.hpp"

namespace ggraph {

namespace {

using Rows = std::vector<std::vector<int>>;

void check_pair(const Tableau& t, int a, int b) {
  if (a < 1 || a > b) throw PreconditionError("Beissinger insertion needs 1 <= a <= b");
  if (t.contains(a) || t.contains(b)) throw PreconditionError("Beissinger insertion of an entry already present");
}

int row_len(const Rows& rows, int r) {
  return r >= 1 && r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()) : 0;
}

// Appends v at the end of row r (1-based), creating the row if needed.
Rows append_to_row(Rows rows, int r, int v) {
  if (r > static_cast<int>(rows.size()) + 1 || (r > 1 && row_len(rows, r - 1) <= row_len(rows, r))) {
    throw PreconditionError("result does not have partition shape");
  }
  if (r == static_cast<int>(rows.size()) + 1) rows.emplace_back();
  rows[static_cast<std::size_t>(r - 1)].push_back(v);
  return rows;
}

// Appends v at the bottom of column c.
Rows append_to_column(Rows rows, int c, int v) {
  int r = 1;
  while (row_len(rows, r) >= c) ++r;
  if (row_len(rows, r) != c - 1) throw PreconditionError("result does not have partition shape");
  return append_to_row(std::move(rows), r, v);
}

Tableau checked(Rows rows) {
  try {
    return Tableau(std::move(rows));
  } catch (const PreconditionError&) {
    throw PreconditionError("result is not partially standard");
  }
}

Tableau insert_all(const Involution& y, Tableau (*step)(const Tableau&, int, int)) {
  Tableau t;
  for (auto [a, b] : cycles_sorted(y)) t = step(t, a, b);
  return t;
}

void require_standard(const Tableau& t) {
  if (!t.is_standard()) throw PreconditionError("tableau is not standard");
}

Tableau remove_largest(const Tableau& t, Cell cell) {
  Rows rows = t.rows();
  rows[static_cast<std::size_t>(cell.row - 1)].pop_back();
  if (rows.back().empty()) rows.pop_back();
  return Tableau(std::move(rows));
}

bool strictly_between(int mid, int a, int b) { return (a < mid && mid < b) || (b < mid && mid < a); }

Involution conj_transposition(const Involution& y, int p, int q) {
  std::vector<int> t(static_cast<std::size_t>(y.size()));
  for (int j = 1; j <= y.size(); ++j) t[static_cast<std::size_t>(j - 1)] = j;
  std::swap(t[static_cast<std::size_t>(p - 1)], t[static_cast<std::size_t>(q - 1)]);
  const Permutation tp(std::move(t));
  return Involution(tp * y.perm() * tp);
}

void check_partner_index(const Involution& y, int i) {
  if (i <= 1 || i >= y.size()) {
    throw PreconditionError("partner index " + std::to_string(i) + " must satisfy 1 < i < " + std::to_string(y.size()));
  }
}

}  // namespace

Rows rbs_insert_filling(const Tableau& t, int a, int b) {
  check_pair(t, a, b);
  if (a == b) return append_to_row(t.rows(), 1, b);
  auto res = rs_insert(t, a);
  return append_to_row(res.tableau.rows(), res.path.cells.back().row + 1, b);
}

Rows cbs_insert_filling(const Tableau& t, int a, int b, CbsVariant variant) {
  check_pair(t, a, b);
  if (variant == CbsVariant::standard) {
    if (a == b) return append_to_column(t.rows(), 1, b);
    auto res = rs_insert(t, a);
    return append_to_column(res.tableau.rows(), res.path.cells.back().col + 1, b);
  }
  if (a == b) return append_to_row(t.rows(), 1, b);
  auto res = column_insert(t, a);
  return append_to_row(res.tableau.rows(), res.path.cells.back().row + 1, b);
}

Tableau rbs_insert(const Tableau& t, int a, int b) { return checked(rbs_insert_filling(t, a, b)); }

Tableau cbs_insert(const Tableau& t, int a, int b, CbsVariant variant) {
  return checked(cbs_insert_filling(t, a, b, variant));
}

Tableau p_rbs(const Involution& y) { return insert_all(y, rbs_insert); }

Tableau p_cbs(const Involution& y) {
  return insert_all(y, [](const Tableau& t, int a, int b) { return cbs_insert(t, a, b, CbsVariant::standard); });
}

Tableau p_cbs_transposed(const Involution& y) {
  return insert_all(y, [](const Tableau& t, int a, int b) { return cbs_insert(t, a, b, CbsVariant::transposed); });
}

Involution p_cbs_inverse(const Tableau& t) {
  require_standard(t);
  const int n = t.size();
  std::vector<std::pair<int, int>> cycles;
  Tableau cur = t;
  for (int b = n; b >= 1; --b) {
    if (!cur.contains(b)) continue;
    const Cell cell = *cur.find(b);
    cur = remove_largest(cur, cell);
    if (cell.col == 1) {
      cycles.emplace_back(b, b);
      continue;
    }
    const int c = cell.col - 1;
    auto [u, a] = rs_uninsert(cur, {cur.column_length(c), c});
    cycles.emplace_back(a, b);
    cur = std::move(u);
  }
  return Involution::from_cycles(n, cycles);
}

Involution p_rbs_inverse(const Tableau& t) {
  require_standard(t);
  const int n = t.size();
  std::vector<std::pair<int, int>> cycles;
  Tableau cur = t;
  for (int b = n; b >= 1; --b) {
    if (!cur.contains(b)) continue;
    const Cell cell = *cur.find(b);
    cur = remove_largest(cur, cell);
    if (cell.row == 1) {
      cycles.emplace_back(b, b);
      continue;
    }
    const int r = cell.row - 1;
    auto [u, a] = rs_uninsert(cur, {r, cur.row_length(r)});
    cycles.emplace_back(a, b);
    cur = std::move(u);
  }
  return Involution::from_cycles(n, cycles);
}

Involution psi(const Involution& y) { return p_cbs_inverse(transpose(p_rbs(y))); }

std::vector<Involution> psi_orbit(const Involution& y) {
  std::vector<Involution> orbit{y};
  for (Involution z = psi(y); z != y; z = psi(z)) orbit.push_back(z);
  return orbit;
}

PsiStats psi_cycle_stats(int n) {
  if (n < 1) throw PreconditionError("psi_cycle_stats needs n >= 1");
  const auto all = enumerate_involutions(n);
  std::unordered_map<Permutation, std::size_t> index;
  index.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) index.emplace(all[k].perm(), k);

  std::vector<std::size_t> next(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) next[k] = index.at(psi(all[k]).perm());

  PsiStats stats;
  stats.n = n;
  std::vector<bool> seen(all.size(), false);
  // Enumeration order is lexicographic, so the first unseen index is the
  // least element of its orbit.
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !seen[j]; j = next[j]) {
      seen[j] = true;
      ++len;
    }
    ++stats.orbit_count;
    if (len == 1) stats.fixed_points.push_back(all[k]);
    if (len > stats.longest_cycle) {
      stats.longest_cycle = len;
      stats.longest_representative = all[k];
    }
  }
  return stats;
}

Involution simrbs_partner(const Involution& y, int i) {
  check_partner_index(y, i);
  const int lo = y(i - 1);
  const int mid = y(i);
  const int hi = y(i + 1);
  auto in_a = [i](int v) { return v >= i - 1 && v <= i + 1; };
  if (in_a(lo) && in_a(mid) && in_a(hi)) return conj_transposition(y, i - 1, i + 1);
  if (strictly_between(mid, lo, hi)) return y;
  if (strictly_between(hi, lo, mid)) return conj_by_s(y, i - 1);
  return conj_by_s(y, i);
}

Involution simcbs_partner(const Involution& y, int i) {
  check_partner_index(y, i);
  auto eps = [&](int j) {
    const int v = y(j);
    if (v < i - 1 || v > i + 1) return v;
    return v == j ? -j : j;
  };
  const std::array<int, 3> e{eps(i - 1), eps(i), eps(i + 1)};
  if (strictly_between(e[1], e[0], e[2])) return y;
  if (strictly_between(e[2], e[0], e[1])) return conj_by_s(y, i - 1);
  if (strictly_between(e[0], e[1], e[2])) return conj_by_s(y, i);
  throw PreconditionError("simcbs_partner: no case applies");
}

}  // namespace ggraph
