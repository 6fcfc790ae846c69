#pragma once

// Dense-matrix evaluation of a W-graph action, used as an oracle.

#include <cstdint>
#include <vector>

#include "ggraph/laurent.hpp"
#include "ggraph/perm.hpp"
#include "ggraph/wgraph.hpp"

namespace dense {

using ggraph::LaurentPoly;
using ggraph::WGraph;

using Matrix = std::vector<std::vector<LaurentPoly>>;

// Dense matrix of H_{s_i}: column v is the image of Y_v.
inline Matrix dense_generator(const WGraph& g, int i) {
  const std::size_t n = g.size();
  Matrix m(n, std::vector<LaurentPoly>(n));
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!g.in_tau(v, i)) {
      m[v][v] = LaurentPoly::x();
      continue;
    }
    m[v][v] = -LaurentPoly::x_inv();
    for (std::uint32_t w = 0; w < n; ++w)
      if (!g.in_tau(w, i) && g.omega(v, w) != 0) m[w][v] += LaurentPoly(g.omega(v, w));
  }
  return m;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a[i][k].is_zero())
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
  return m;
}

inline bool dense_axioms(const WGraph& g) {
  const std::size_t sz = g.size();
  std::vector<Matrix> h(static_cast<std::size_t>(g.n));
  for (int i = 1; i < g.n; ++i) h[static_cast<std::size_t>(i)] = dense_generator(g, i);
  const LaurentPoly q = LaurentPoly::x_minus_x_inv();
  for (int i = 1; i < g.n; ++i) {
    const Matrix& a = h[static_cast<std::size_t>(i)];
    Matrix rhs = identity(sz);
    for (std::size_t r = 0; r < sz; ++r)
      for (std::size_t c = 0; c < sz; ++c) rhs[r][c] += q * a[r][c];
    if (mul(a, a) != rhs) return false;
    for (int j = i + 1; j < g.n; ++j) {
      const Matrix& b = h[static_cast<std::size_t>(j)];
      if (j == i + 1 ? mul(a, mul(b, a)) != mul(b, mul(a, b)) : mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

inline std::int64_t dense_trace_at_one(const WGraph& g, const ggraph::Permutation& w) {
  Matrix m = identity(g.size());
  for (int i : ggraph::reduced_word(w)) m = mul(m, dense_generator(g, i));
  std::int64_t t = 0;
  for (std::size_t k = 0; k < g.size(); ++k) t += m[k][k].eval_at_one();
  return t;
}

}  // namespace dense
