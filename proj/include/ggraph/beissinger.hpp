#pragma once

#include <cstddef>
#include <vector>

#include "ggraph/perm.hpp"
#include "ggraph/tableau.hpp"

namespace ggraph {

// Row Beissinger insertion T <-rBS (a, b), a <= b. Throws PreconditionError on
// duplicate entries or when the result is not partially standard.
Tableau rbs_insert(const Tableau& t, int a, int b);

enum class CbsVariant {
  standard,    // T <-cBS (a, b)
  transposed,  // T <=cBS (a, b): column-insert a, b goes to the end of the next row
};

// Column Beissinger insertion; same preconditions as rbs_insert.
Tableau cbs_insert(const Tableau& t, int a, int b, CbsVariant variant = CbsVariant::standard);

// The same box placements without the partial-standardness check on the
// result, e.g. [[1,4,6],[3]] <-cBS (2,5) = [[1,2,6],[3,4,5]]. Still throws
// if the boxes do not form a partition shape.
std::vector<std::vector<int>> rbs_insert_filling(const Tableau& t, int a, int b);
std::vector<std::vector<int>> cbs_insert_filling(const Tableau& t, int a, int b,
                                                 CbsVariant variant = CbsVariant::standard);

Tableau p_rbs(const Involution& y);
Tableau p_cbs(const Involution& y);
// The empty tableau <=cBS each cycle of y in turn; equals transpose(p_cbs(y)).
Tableau p_cbs_transposed(const Involution& y);

// Inverses of p_rbs / p_cbs. Throw PreconditionError unless t is standard.
Involution p_rbs_inverse(const Tableau& t);
Involution p_cbs_inverse(const Tableau& t);

// p_cbs_inverse(transpose(p_rbs(y))).
Involution psi(const Involution& y);

// y, psi(y), psi(psi(y)), ... up to (not including) the return to y.
std::vector<Involution> psi_orbit(const Involution& y);

struct PsiStats {
  int n = 0;
  std::size_t longest_cycle = 0;
  std::size_t orbit_count = 0;
  // Lexicographically least element of a longest orbit.
  Involution longest_representative;
  std::vector<Involution> fixed_points;
};

PsiStats psi_cycle_stats(int n);

// The involution z with P_rBS(y) = D_i(P_rBS(z)), by the closed formula.
// Requires 1 < i < n.
Involution simrbs_partner(const Involution& y, int i);
// The involution z with P_cBS(y) = D_i(P_cBS(z)), by the closed formula.
Involution simcbs_partner(const Involution& y, int i);

}  // namespace ggraph
