#include "ggraph/tableau.hpp"

#include <algorithm>
#include <set>

#include "ggraph/errors.hpp"
#include "ggraph/perm.hpp"

namespace ggraph {

struct TableauAccess {
  static Tableau make(std::vector<std::vector<int>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    Tableau t;
    t.rows_ = std::move(rows);
    return t;
  }
  static std::vector<std::vector<int>>& rows(Tableau& t) { return t.rows_; }
};

namespace {

using Rows = std::vector<std::vector<int>>;

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

int row_len(const Rows& rows, int r) {
  return r >= 1 && r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[idx(r)].size()) : 0;
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::set<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) throw PreconditionError("tableau has an empty row");
    if (r > 0 && row.size() > rows_[r - 1].size()) throw PreconditionError("row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw PreconditionError("tableau entries must be positive");
      if (!seen.insert(row[c]).second) throw PreconditionError("repeated tableau entry " + std::to_string(row[c]));
      if (c > 0 && row[c - 1] >= row[c]) throw PreconditionError("rows must strictly increase");
      if (r > 0 && rows_[r - 1][c] >= row[c]) throw PreconditionError("columns must strictly increase");
    }
  }
}

int Tableau::row_length(int r) const { return row_len(rows_, r); }

int Tableau::column_length(int c) const {
  int k = 0;
  while (k < num_rows() && static_cast<int>(rows_[static_cast<std::size_t>(k)].size()) >= c) ++k;
  return c >= 1 ? k : 0;
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

Shape Tableau::shape() const {
  Shape s;
  for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
  return s;
}

std::vector<int> Tableau::entries() const {
  std::vector<int> out;
  for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Cell> Tableau::find(int value) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), value);
    if (it != row.end() && *it == value) {
      return Cell{static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1};
    }
  }
  return std::nullopt;
}

bool Tableau::is_standard() const {
  const auto e = entries();
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] != static_cast<int>(j) + 1) return false;
  }
  return true;
}

InsertResult rs_insert(const Tableau& t, int a) {
  if (a < 1) throw PreconditionError("inserted value must be positive");
  if (t.contains(a)) throw PreconditionError("value " + std::to_string(a) + " already occurs in the tableau");
  Rows rows = t.rows();
  BumpingPath path;
  int x = a;
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) rows.emplace_back();
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    path.cells.push_back({static_cast<int>(r) + 1, static_cast<int>(it - row.begin()) + 1});
    path.inserted_values.push_back(x);
    if (it == row.end()) {
      row.push_back(x);
      break;
    }
    std::swap(x, *it);
  }
  return {TableauAccess::make(std::move(rows)), std::move(path)};
}

InsertResult column_insert(const Tableau& t, int a) {
  if (a < 1) throw PreconditionError("inserted value must be positive");
  if (t.contains(a)) throw PreconditionError("value " + std::to_string(a) + " already occurs in the tableau");
  Rows rows = t.rows();
  BumpingPath path;
  int x = a;
  for (int c = 1;; ++c) {
    int r = 1;
    while (row_len(rows, r) >= c && rows[idx(r)][idx(c)] < x) ++r;
    path.cells.push_back({r, c});
    path.inserted_values.push_back(x);
    if (row_len(rows, r) < c) {
      if (r > static_cast<int>(rows.size())) rows.emplace_back();
      rows[idx(r)].push_back(x);
      break;
    }
    std::swap(x, rows[idx(r)][idx(c)]);
  }
  return {TableauAccess::make(std::move(rows)), std::move(path)};
}

namespace {

void require_corner(const Tableau& t, Cell corner) {
  const bool ok = corner.row >= 1 && corner.row <= t.num_rows() && corner.col == t.row_length(corner.row) &&
                  t.row_length(corner.row + 1) < corner.col;
  if (!ok) {
    throw PreconditionError("(" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                            ") is not a removable box");
  }
}

}  // namespace

std::pair<Tableau, int> rs_uninsert(const Tableau& t, Cell corner) {
  require_corner(t, corner);
  Rows rows = t.rows();
  int x = rows[idx(corner.row)].back();
  rows[idx(corner.row)].pop_back();
  for (int r = corner.row - 1; r >= 1; --r) {
    auto& row = rows[idx(r)];
    auto it = std::lower_bound(row.begin(), row.end(), x);
    std::swap(x, *std::prev(it));
  }
  return {TableauAccess::make(std::move(rows)), x};
}

std::pair<Tableau, int> column_uninsert(const Tableau& t, Cell corner) {
  require_corner(t, corner);
  Rows rows = t.rows();
  int x = rows[idx(corner.row)].back();
  rows[idx(corner.row)].pop_back();
  for (int c = corner.col - 1; c >= 1; --c) {
    // last entry of column c smaller than x
    int r = 1;
    while (row_len(rows, r + 1) >= c && rows[idx(r + 1)][idx(c)] < x) ++r;
    std::swap(x, rows[idx(r)][idx(c)]);
  }
  return {TableauAccess::make(std::move(rows)), x};
}

std::pair<Tableau, Tableau> pq_rs(const Permutation& w) {
  Tableau p;
  Rows q;
  for (int j = 1; j <= w.size(); ++j) {
    auto res = rs_insert(p, w(j));
    const Cell c = res.path.cells.back();
    if (c.row > static_cast<int>(q.size())) q.emplace_back();
    q[idx(c.row)].push_back(j);
    p = std::move(res.tableau);
  }
  return {std::move(p), TableauAccess::make(std::move(q))};
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> out;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

Tableau dual_equiv(const Tableau& t, int i) {
  for (int v : {i - 1, i, i + 1}) {
    if (v < 1 || !t.contains(v)) {
      throw PreconditionError("dual_equiv: entry " + std::to_string(v) + " is absent");
    }
  }
  const auto word = reading_word(t);
  auto pos = [&](int v) { return std::find(word.begin(), word.end(), v) - word.begin(); };
  const auto p_lo = pos(i - 1);
  const auto p_mid = pos(i);
  const auto p_hi = pos(i + 1);
  auto between = [](auto m, auto a, auto b) { return (a < m && m < b) || (b < m && m < a); };

  int swap_a = 0;
  if (between(p_hi, p_mid, p_lo)) {
    swap_a = i - 1;
  } else if (between(p_lo, p_mid, p_hi)) {
    swap_a = i;
  } else {
    return t;
  }
  Tableau out = t;
  for (auto& row : TableauAccess::rows(out)) {
    for (int& v : row) {
      if (v == swap_a) {
        v = swap_a + 1;
      } else if (v == swap_a + 1) {
        v = swap_a;
      }
    }
  }
  return out;
}

Tableau transpose(const Tableau& t) {
  Rows rows;
  for (int c = 1; c <= t.row_length(1); ++c) {
    std::vector<int> col;
    for (int r = 1; r <= t.column_length(c); ++r) col.push_back(t.at({r, c}));
    rows.push_back(std::move(col));
  }
  return TableauAccess::make(std::move(rows));
}

Tableau restrict(const Tableau& t, std::span<const int> keep) {
  const std::set<int> allowed(keep.begin(), keep.end());
  Rows rows;
  for (const auto& row : t.rows()) {
    std::vector<int> kept;
    bool gap = false;
    for (int v : row) {
      if (allowed.contains(v)) {
        if (gap) throw PreconditionError("restriction is not a tableau of partition shape");
        kept.push_back(v);
      } else {
        gap = true;
      }
    }
    rows.push_back(std::move(kept));
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() > rows[r - 1].size() || (rows[r - 1].empty() && !rows[r].empty())) {
      throw PreconditionError("restriction is not a tableau of partition shape");
    }
  }
  return TableauAccess::make(std::move(rows));
}

Tableau restrict_to_initial(const Tableau& t, int m) {
  std::vector<int> keep;
  for (int v = 1; v <= m; ++v) keep.push_back(v);
  return restrict(t, keep);
}

Shape conjugate(const Shape& shape) {
  Shape out;
  if (shape.empty()) return out;
  for (int c = 1; c <= shape.front(); ++c) {
    int k = 0;
    while (k < static_cast<int>(shape.size()) && shape[static_cast<std::size_t>(k)] >= c) ++k;
    out.push_back(k);
  }
  return out;
}

int odd_lines(const Shape& shape, LineDirection dir) {
  const Shape lines = dir == LineDirection::rows ? shape : conjugate(shape);
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](int len) { return len % 2 == 1; }));
}

int odd_lines(const Tableau& t, LineDirection dir) { return odd_lines(t.shape(), dir); }

std::vector<Tableau> standard_tableaux(int n) {
  std::vector<Rows> level{Rows{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<Rows> next;
    for (const auto& rows : level) {
      for (std::size_t r = 0; r <= rows.size(); ++r) {
        const std::size_t len = r < rows.size() ? rows[r].size() : 0;
        if (r > 0 && rows[r - 1].size() <= len) continue;
        Rows grown = rows;
        if (r == grown.size()) grown.emplace_back();
        grown[r].push_back(m);
        next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Tableau> out;
  out.reserve(level.size());
  for (auto& rows : level) out.push_back(TableauAccess::make(std::move(rows)));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Tableau& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r > 0) out += ",";
    out += "[";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c > 0) out += ",";
      out += std::to_string(t.rows()[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(const Shape& s) {
  std::string out = "(";
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(s[j]);
  }
  return out + ")";
}

}  // namespace ggraph
