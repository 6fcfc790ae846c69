#include "ggraph/gelfand.hpp"

#include <algorithm>

#include "ggraph/beissinger.hpp"
#include "ggraph/errors.hpp"

namespace ggraph {

namespace {

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

std::vector<GelfandVertex> sorted_vertices(int n, Variant variant) {
  std::vector<std::pair<int, GelfandVertex>> keyed;
  for (const auto& w : enumerate_involutions(n)) {
    GelfandVertex v = embed(w, embedding_of(variant));
    keyed.emplace_back(length(v.z.perm()), std::move(v));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second.z < b.second.z;
  });
  std::vector<GelfandVertex> out;
  out.reserve(keyed.size());
  for (auto& [len, v] : keyed) out.push_back(std::move(v));
  return out;
}

std::unordered_map<Permutation, std::uint32_t> index_vertices(const std::vector<GelfandVertex>& vertices) {
  std::unordered_map<Permutation, std::uint32_t> index;
  index.reserve(vertices.size());
  for (std::uint32_t k = 0; k < vertices.size(); ++k) index.emplace(vertices[k].z.perm(), k);
  return index;
}

StandardModule build_module(int n, Variant variant, const std::vector<GelfandVertex>& vertices,
                            const std::unordered_map<Permutation, std::uint32_t>& index) {
  std::vector<int> lengths;
  lengths.reserve(vertices.size());
  for (const auto& v : vertices) lengths.push_back(length(v.z.perm()));
  std::vector<std::vector<Action>> actions(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i < n; ++i) {
    auto& table = actions[idx(i)];
    table.reserve(vertices.size());
    for (std::uint32_t k = 0; k < vertices.size(); ++k) {
      Action a = gelfand_action_kind(vertices[k], i, variant);
      if (a.kind == ActionKind::ascent || a.kind == ActionKind::descent) {
        auto it = index.find(conj_by_s(vertices[k].z, i).perm());
        if (it == index.end()) throw std::logic_error("Gelfand vertex set is not closed under conjugation");
        a.target = it->second;
      } else {
        a.target = k;
      }
      table.push_back(a);
    }
  }
  return StandardModule(n, std::move(lengths), std::move(actions));
}

}  // namespace

const char* to_string(Variant v) { return v == Variant::row ? "row" : "col"; }

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "row") return Variant::row;
  if (text == "col") return Variant::col;
  return std::nullopt;
}

GelfandVertex embed(const Involution& w, Embedding mode) {
  const int n = w.size();
  std::vector<int> fixed;
  for (int j = 1; j <= n; ++j) {
    if (w(j) == j) fixed.push_back(j);
  }
  const int q = static_cast<int>(fixed.size());
  std::vector<int> word(idx(2 * n + 1), 0);
  for (int j = 1; j <= n; ++j) {
    if (w(j) != j) word[idx(j)] = w(j);
  }
  for (int k = 1; k <= q; ++k) {
    const int c = fixed[idx(k)];
    const int image = mode == Embedding::asc ? n + k : n + q + 1 - k;
    word[idx(c)] = image;
    word[idx(image)] = c;
  }
  for (int j = n + q + 1; j <= 2 * n; ++j) word[idx(j)] = j % 2 == 0 ? j - 1 : j + 1;
  return {Involution(std::move(word)), mode};
}

Involution source(const GelfandVertex& v) {
  const int n = v.n();
  std::vector<int> word(idx(n + 1));
  for (int j = 1; j <= n; ++j) word[idx(j)] = v.z(j) <= n ? v.z(j) : j;
  return Involution(std::move(word));
}

DescentData descent_data(const Involution& z, int n) {
  DescentData d;
  for (int i = 1; i < n; ++i) {
    const int a = z(i);
    const int b = z(i + 1);
    if (a == i + 1) {
      d.des_eq.push_back(i);
    } else if (a > n && b > n) {
      d.asc_eq.push_back(i);
    } else if (a > b) {
      d.des_lt.push_back(i);
    } else {
      d.asc_lt.push_back(i);
    }
  }
  return d;
}

Action gelfand_action_kind(const GelfandVertex& v, int i, Variant variant) {
  const int n = v.n();
  if (i < 1 || i >= n) throw PreconditionError("generator index out of range");
  const int a = v.z(i);
  const int b = v.z(i + 1);
  Action act{ActionKind::ascent, 0};
  if (a == i + 1) {
    act.kind = variant == Variant::row ? ActionKind::eigen_x : ActionKind::eigen_neg_inv;
  } else if (a > n && b > n) {
    act.kind = variant == Variant::row ? ActionKind::eigen_neg_inv : ActionKind::eigen_x;
  } else if (a > b) {
    act.kind = ActionKind::descent;
  }
  return act;
}

std::vector<int> tau(const GelfandVertex& v) {
  std::vector<int> out;
  for (int i = 1; i < v.n(); ++i) {
    const bool ascent = v.z(i) < v.z(i + 1);
    if (ascent || (v.mode == Embedding::des && v.z(i) == i + 1)) out.push_back(i);
  }
  return out;
}

bool is_visible_descent(const Involution& z, int i) { return z(i + 1) < std::min(i, z(i)); }

bool satisfies_asc_criterion(const Involution& z, int n) {
  if (z.size() != 2 * n || z.fixed_point_count() != 0) return false;
  for (int i = n + 1; i < 2 * n; ++i) {
    if (is_visible_descent(z, i)) return false;
  }
  return true;
}

std::vector<int> transfer_points(const GelfandVertex& v) {
  std::vector<int> out;
  for (int i = 1; i <= v.n(); ++i) {
    if (v.z(i) > v.n()) out.push_back(i);
  }
  return out;
}

Tableau hat_p(const GelfandVertex& v) {
  const Tableau full = v.mode == Embedding::asc ? p_rbs(v.z) : p_cbs(v.z);
  return restrict_to_initial(full, v.n());
}

Shape lambda_shape(const GelfandVertex& v) { return hat_p(v).shape(); }

Tableau iota_line(const Tableau& t, Variant direction) {
  if (!t.is_standard()) throw PreconditionError("iota_line needs a standard tableau");
  const int n = t.size();
  std::vector<std::vector<int>> rows = t.rows();
  auto row_len = [&](int r) { return r <= static_cast<int>(rows.size()) ? static_cast<int>(rows[idx(r)].size()) : 0; };
  auto push = [&](int r, int value) {
    if (r > static_cast<int>(rows.size())) rows.emplace_back();
    rows[idx(r)].push_back(value);
  };
  int next = n + 1;
  if (direction == Variant::row) {
    const Shape cols = conjugate(t.shape());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] % 2 == 1) push(cols[c] + 1, next++);
    }
    for (bool top = true; next <= 2 * n; top = !top) push(top ? 1 : 2, next++);
  } else {
    const int num_rows = t.num_rows();
    for (int r = 1; r <= num_rows; ++r) {
      if (row_len(r) % 2 == 1) push(r, next++);
    }
    while (next <= 2 * n) push(1, next++);
  }
  return Tableau(std::move(rows));
}

GelfandModule::GelfandModule(int n, Variant variant)
    : n_(n),
      variant_(variant),
      vertices_(sorted_vertices(n, variant)),
      index_(index_vertices(vertices_)),
      module_(build_module(n, variant, vertices_, index_)) {
  if (n < 1) throw PreconditionError("Gelfand module needs n >= 1");
}

std::optional<std::uint32_t> GelfandModule::index_of(const Involution& z) const {
  auto it = index_.find(z.perm());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GelfandModule::check(const ModuleElement& e) const {
  if (e.variant != variant_) throw PreconditionError("module element belongs to the other Gelfand module");
  for (const auto& [v, c] : e.coeffs.entries) {
    if (v >= size()) throw PreconditionError("module element has an out-of-range vertex");
  }
}

ModuleElement GelfandModule::h_action(int i, const ModuleElement& e) const {
  check(e);
  if (i < 1 || i >= n_) throw PreconditionError("generator index out of range");
  return {variant_, module_.apply(i, e.coeffs)};
}

ModuleElement GelfandModule::bar(const ModuleElement& e) const {
  check(e);
  return {variant_, module_.bar(e.coeffs)};
}

CanonicalBasis GelfandModule::canonical_basis(const CanonicalOptions& opts) const {
  return ggraph::canonical_basis(module_, opts);
}

}  // namespace ggraph
