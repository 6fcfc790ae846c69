#include "ggraph/json_io.hpp"

#include "ggraph/errors.hpp"

namespace ggraph {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

std::int64_t as_int64(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::vector<int> as_int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  std::vector<int> out;
  for (const auto& e : j) out.push_back(as_int(e));
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Permutation& w) { return w.word(); }

Json to_json(const Tableau& t) {
  Json out = Json::array();
  for (const auto& row : t.rows()) out.push_back(row);
  return out;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back({t.exp, t.coeff});
  return out;
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& block : p) out.push_back(block);
  return out;
}

Json to_json(const WGraph& g) {
  Json tau = Json::array();
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    Json set = Json::array();
    for (int i = 1; i < g.n; ++i) {
      if (g.in_tau(v, i)) set.push_back(i);
    }
    tau.push_back(std::move(set));
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.weight});
  Json vertices = Json::array();
  for (const auto& w : g.vertices) vertices.push_back(w);
  return Json{{"n", g.n},
              {"variant", g.variant},
              {"reduced", g.reduced},
              {"vertices", std::move(vertices)},
              {"tau", std::move(tau)},
              {"edges", std::move(edges)}};
}

Json involution_json(const Involution& y) {
  return Json{{"oneline", to_oneline(y.perm())}, {"cycles", to_cycle_string(y)}};
}

Json to_json(const PsiStats& s) {
  Json fixed = Json::array();
  for (const auto& y : s.fixed_points) fixed.push_back(involution_json(y));
  return Json{{"n", s.n},
              {"longest_cycle", s.longest_cycle},
              {"orbits", s.orbit_count},
              {"longest_representative", involution_json(s.longest_representative)},
              {"fixed_points", std::move(fixed)}};
}

Json to_json(const ClassifyReport& r) {
  return Json{{"n", r.n},
              {"variant", to_string(r.variant)},
              {"vertices", r.vertices},
              {"fibers", r.fibers},
              {"molecules", r.molecules},
              {"cells", r.cells},
              {"algebraic_edges", r.algebraic_edges},
              {"combinatorial_edges", r.combinatorial_edges},
              {"molecules_are_fibers", r.molecules_are_fibers},
              {"edges_match", r.edges_match},
              {"cells_are_molecules", r.cells_are_molecules},
              {"nonreduced_cells", r.nonreduced_cells},
              {"nonreduced_cells_agree", r.nonreduced_cells_agree},
              {"counterexamples", r.counterexamples},
              {"ok", r.ok()}};
}

Json basis_to_json(const GelfandModule& module, const CanonicalBasis& basis) {
  Json vertices = Json::array();
  for (const auto& v : module.vertices()) vertices.push_back(v.z.word());
  Json columns = Json::array();
  for (const auto& col : basis.columns) {
    Json entries = Json::array();
    for (const auto& [y, c] : col.entries) entries.push_back({y, to_json(c)});
    columns.push_back(std::move(entries));
  }
  Json mu = Json::array();
  for (const auto& e : basis.mu) mu.push_back({e.y, e.z, e.mu});
  return Json{{"variant", module.variant() == Variant::row ? "M" : "N"},
              {"n", module.n()},
              {"vertices", std::move(vertices)},
              {"columns", std::move(columns)},
              {"mu", std::move(mu)}};
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a tableau must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) rows.push_back(as_int_list(row));
  return Tableau(std::move(rows));
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a Laurent polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw ParseError("bad Laurent term " + term.dump());
    p += LaurentPoly::monomial(as_int64(term[1]), as_int(term[0]));
  }
  return p;
}

WGraph wgraph_from_json(const Json& j) {
  WGraph g;
  g.n = as_int(field(j, "n"));
  const Json& variant = field(j, "variant");
  if (!variant.is_string()) throw ParseError("variant must be a string");
  g.variant = variant.get<std::string>();
  const Json& reduced = field(j, "reduced");
  if (!reduced.is_boolean()) throw ParseError("reduced must be a boolean");
  g.reduced = reduced.get<bool>();
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw ParseError("vertices must be an array");
  for (const auto& w : vertices) g.vertices.push_back(as_int_list(w));
  const Json& tau = field(j, "tau");
  if (!tau.is_array() || tau.size() != g.vertices.size()) throw ParseError("tau must list one set per vertex");
  for (const auto& set : tau) {
    std::uint32_t bits = 0;
    for (int i : as_int_list(set)) {
      if (i < 1 || i >= g.n) throw ParseError("tau entry out of range");
      bits |= 1U << i;
    }
    g.tau.push_back(bits);
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) throw ParseError("bad edge " + e.dump());
    const int from = as_int(e[0]);
    const int to = as_int(e[1]);
    const std::int64_t weight = as_int64(e[2]);
    if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= g.size() || static_cast<std::size_t>(to) >= g.size()) {
      throw ParseError("edge endpoint out of range");
    }
    if (weight != 0) g.edges.push_back({static_cast<std::uint32_t>(from), static_cast<std::uint32_t>(to), weight});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace ggraph
