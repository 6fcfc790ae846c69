#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ggraph {

class Permutation;

// Weakly decreasing row lengths.
using Shape = std::vector<int>;

// 1-based (row, column) position of a box.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// The boxes visited by a Schensted insertion, one per row 1..k, together
// with the value placed in each of them. The last cell is the new box.
struct BumpingPath {
  std::vector<Cell> cells;
  std::vector<int> inserted_values;
};

// A partially standard tableau: distinct positive entries, strictly increasing
// along rows and down columns, on a partition shape. Rows are listed top first.
class Tableau {
 public:
  Tableau() = default;
  // Throws PreconditionError unless `rows` is partially standard.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_length(int r) const;
  int column_length(int c) const;
  int size() const;
  bool empty() const { return rows_.empty(); }
  int at(Cell c) const { return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)]; }
  Shape shape() const;
  // All entries in increasing order.
  std::vector<int> entries() const;
  std::optional<Cell> find(int value) const;
  bool contains(int value) const { return find(value).has_value(); }
  // Entries are exactly 1..size().
  bool is_standard() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  friend struct TableauAccess;
  std::vector<std::vector<int>> rows_;
};

struct InsertResult {
  Tableau tableau;
  BumpingPath path;
};

// Schensted row insertion T <-RS a. Throws if a already occurs in T.
InsertResult rs_insert(const Tableau& t, int a);
// Column insertion: a enters column 1 and bumps the first larger entry into
// the next column. Equals transpose(rs_insert(transpose(t), a)).
InsertResult column_insert(const Tableau& t, int a);

// Inverse Schensted insertion from a removable box. Returns (U, x) with
// rs_insert(U, x) == t and new box `corner`.
std::pair<Tableau, int> rs_uninsert(const Tableau& t, Cell corner);
// Column-insertion analogue of rs_uninsert.
std::pair<Tableau, int> column_uninsert(const Tableau& t, Cell corner);

// (P_RS(w), Q_RS(w)).
std::pair<Tableau, Tableau> pq_rs(const Permutation& w);

// Rows concatenated starting with the last row.
std::vector<int> reading_word(const Tableau& t);

// The dual equivalence operator D_i. Requires i-1, i, i+1 in t.
Tableau dual_equiv(const Tableau& t, int i);

Tableau transpose(const Tableau& t);

// Entries of t lying in `keep`. Throws PreconditionError unless the kept
// boxes form a partition shape.
Tableau restrict(const Tableau& t, std::span<const int> keep);
// Restriction to entries 1..m.
Tableau restrict_to_initial(const Tableau& t, int m);

enum class LineDirection { rows, columns };
// Number of rows (or columns) of odd length.
int odd_lines(const Tableau& t, LineDirection dir);
int odd_lines(const Shape& shape, LineDirection dir);
Shape conjugate(const Shape& shape);

// All standard tableaux with n boxes, sorted.
std::vector<Tableau> standard_tableaux(int n);

// "[[1,2],[3]]".
std::string to_string(const Tableau& t);
std::string to_string(const Shape& s);

}  // namespace ggraph
