#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggraph/beissinger.hpp"
#include "ggraph/errors.hpp"
#include "ggraph/gelfand.hpp"
#include "ggraph/hecke.hpp"
#include "ggraph/json_io.hpp"
#include "ggraph/tableau.hpp"
#include "ggraph/verify.hpp"
#include "ggraph/wgraph.hpp"

namespace ggraph::cli {

namespace {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// Literal JSON, "-" for stdin, or a file path.
std::string read_source(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') return arg;
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot read \"" + arg + "\"");
  return slurp(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw PreconditionError("cannot write \"" + path + "\"");
  f << text;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected a pair \"a,b\", got \"" + text + "\"");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const int x = std::stoi(a, &used_a);
    const int y = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {x, y};
  } catch (const std::logic_error&) {
    throw ParseError("expected a pair \"a,b\", got \"" + text + "\"");
  }
}

Variant variant_arg(const std::string& text) {
  auto v = parse_variant(text);
  if (!v) throw ParseError("unknown variant \"" + text + "\" (expected row or col)");
  return *v;
}

void check_size(int n, bool force) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (n > kGraphCap && !force) {
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the default cap " + std::to_string(kGraphCap) +
                      "; pass --force to run anyway");
  }
}

// ---- insert

struct InsertArgs {
  std::string algo;
  std::string tableau;
  std::string variant = "standard";
  std::optional<int> value;
  std::optional<std::string> pair;
  bool unchecked = false;
};

void cmd_insert(const InsertArgs& a, std::ostream& out) {
  const Tableau t = tableau_from_json(parse_json(read_source(a.tableau)));
  std::vector<std::vector<int>> result;
  if (a.algo == "rs") {
    if (!a.value) throw ParseError("--algo rs needs --value");
    result = rs_insert(t, *a.value).tableau.rows();
  } else {
    if (!a.pair) throw ParseError("--algo " + a.algo + " needs --pair");
    const auto [x, y] = parse_pair(*a.pair);
    if (a.algo == "rbs") {
      result = a.unchecked ? rbs_insert_filling(t, x, y) : rbs_insert(t, x, y).rows();
    } else {
      CbsVariant v = CbsVariant::standard;
      if (a.variant == "transposed") {
        v = CbsVariant::transposed;
      } else if (a.variant != "standard") {
        throw ParseError("unknown cbs variant \"" + a.variant + "\"");
      }
      result = a.unchecked ? cbs_insert_filling(t, x, y, v) : cbs_insert(t, x, y, v).rows();
    }
  }
  out << Json(result).dump() << "\n";
}

// ---- psi

struct PsiArgs {
  int n = 0;
  bool cycles = false;
  bool fixed_points = false;
  std::optional<std::string> orbit;
};

void cmd_psi(const PsiArgs& a, std::ostream& out) {
  if (a.n < 1) throw PreconditionError("n must be at least 1");
  if (a.orbit) {
    const Involution y = parse_involution(*a.orbit, a.n);
    if (y.size() != a.n) throw PreconditionError("involution is not in S_" + std::to_string(a.n));
    const auto orbit = psi_orbit(y);
    Json rows = Json::array();
    std::string chain;
    for (const auto& z : orbit) {
      rows.push_back(involution_json(z));
      chain += to_cycle_string(z) + "->";
    }
    chain += to_cycle_string(y);
    out << Json{{"n", a.n}, {"length", orbit.size()}, {"orbit", rows}, {"chain", chain}}.dump() << "\n";
    return;
  }
  const PsiStats stats = psi_cycle_stats(a.n);
  if (a.fixed_points && !a.cycles) {
    Json rows = Json::array();
    for (const auto& y : stats.fixed_points) rows.push_back(involution_json(y));
    out << Json{{"n", a.n}, {"fixed_points", rows}}.dump() << "\n";
    return;
  }
  out << to_json(stats).dump() << "\n";
}

// ---- graph

struct GraphArgs {
  int n = 0;
  std::string variant = "row";
  bool no_reduced = false;
  bool force = false;
  std::string out;
  std::string dot;
};

Json labelled_blocks(const WGraph& g, const GelfandModule& module, const Partition& p) {
  Json blocks = Json::array();
  for (const auto& block : p) {
    Json labels = Json::array();
    for (auto v : block) labels.push_back(g.label(v));
    blocks.push_back(Json{{"shape", lambda_shape(module.vertex(block.front()))}, {"vertices", labels}});
  }
  return blocks;
}

void emit(const Json& j, const std::string& path, std::ostream& out, const std::string& summary) {
  if (path.empty()) {
    out << j.dump() << "\n";
  } else {
    write_file(path, j.dump() + "\n");
    out << summary << "\n";
  }
}

int cmd_graph(const std::string& verb, const GraphArgs& a, std::ostream& out) {
  check_size(a.n, a.force);
  const Variant variant = variant_arg(a.variant);
  const GelfandModule module(a.n, variant);
  const CanonicalBasis basis = module.canonical_basis();

  if (verb == "classify") {
    const ClassifyReport r = classify(module, basis);
    out << "molecules=cells: " << (r.ok() ? "OK" : "FAIL") << " (fibers=" << r.fibers << ")\n";
    for (const auto& c : r.counterexamples) out << "  " << c << "\n";
    if (!a.out.empty()) write_file(a.out, to_json(r).dump(1) + "\n");
    return r.ok() ? kOk : kPrecondition;
  }
  if (verb == "basis") {
    emit(basis_to_json(module, basis), a.out, out, "vertices=" + std::to_string(module.size()));
    return kOk;
  }

  const WGraph g = build_gamma(module, basis, !a.no_reduced);
  if (!a.dot.empty()) write_file(a.dot, to_dot(g));
  if (verb == "build") {
    emit(to_json(g), a.out, out,
         "vertices=" + std::to_string(g.size()) + " edges=" + std::to_string(g.edges.size()));
  } else if (verb == "molecules") {
    const Partition p = molecules(g);
    emit(Json{{"n", a.n}, {"variant", g.variant}, {"reduced", g.reduced}, {"molecules", labelled_blocks(g, module, p)}},
         a.out, out, "molecules=" + std::to_string(p.size()));
  } else {
    const CellDecomposition c = cells(g);
    emit(Json{{"n", a.n},
              {"variant", g.variant},
              {"reduced", g.reduced},
              {"cells", labelled_blocks(g, module, c.cells)},
              {"order", c.order}},
         a.out, out, "cells=" + std::to_string(c.cells.size()));
  }
  return kOk;
}

// ---- verify

int cmd_verify(const std::string& suite, int n, bool force, std::ostream& out) {
  check_size(n, force);
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(suite);
  }
  bool ok = true;
  Json reports = Json::array();
  for (const auto& s : suites) {
    const SuiteReport r = run_suite(s, n);
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    reports.push_back(Json{{"suite", r.suite}, {"n", r.n}, {"ok", r.ok()}, {"checks", checks}});
    ok = ok && r.ok();
  }
  out << Json{{"ok", ok}, {"suites", reports}}.dump(1) << "\n";
  return ok ? kOk : kPrecondition;
}

// ---- kl

void cmd_kl_export(int n, const std::string& path, std::ostream& out) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  Json elements = Json::array();
  for (const auto& [w, h] : kl_basis(n)) {
    Json terms = Json::array();
    for (const auto& [y, c] : h.terms()) terms.push_back({y.word(), to_json(c)});
    elements.push_back(Json{{"w", w.word()}, {"terms", terms}});
  }
  emit(Json{{"n", n}, {"basis", elements}}, path, out, "elements=" + std::to_string(elements.size()));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gelfand W-graph toolkit: insertion algorithms, Psi statistics, W-graphs and verification suites"};
  app.name("ggraph");
  app.require_subcommand(1);

  InsertArgs ins;
  auto* insert = app.add_subcommand("insert", "Insert into a tableau and print the result as JSON");
  insert->add_option("--algo", ins.algo, "rs, rbs or cbs")->required()->check(CLI::IsMember({"rs", "rbs", "cbs"}));
  insert->add_option("--tableau", ins.tableau, "JSON rows, a file, or - for stdin")->required();
  insert->add_option("--value", ins.value, "Value for rs");
  insert->add_option("--pair", ins.pair, "a,b for rbs and cbs");
  insert->add_option("--variant", ins.variant, "cbs only: standard or transposed");
  insert->add_flag("--unchecked", ins.unchecked, "rbs/cbs: print the filling even if it is not partially standard");

  PsiArgs psi_args;
  auto* psi_cmd = app.add_subcommand("psi", "Statistics of Psi on involutions of [n]");
  psi_cmd->add_option("--n", psi_args.n)->required();
  auto* cyc = psi_cmd->add_flag("--cycles", psi_args.cycles, "Longest cycle and orbit count (default)");
  auto* fix = psi_cmd->add_flag("--fixed-points", psi_args.fixed_points, "Fixed points of Psi");
  auto* orb = psi_cmd->add_option("--orbit", psi_args.orbit, "Orbit of an involution (one-line or cycles)");
  cyc->excludes(fix)->excludes(orb);
  fix->excludes(orb);

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "Build and analyse the W-graphs of M and N");
  graph->require_subcommand(1);
  std::string graph_verb;
  for (const char* verb : {"build", "molecules", "cells", "classify", "basis"}) {
    auto* sub = graph->add_subcommand(verb);
    sub->add_option("--n", ga.n)->required();
    sub->add_option("--variant", ga.variant, "row or col");
    sub->add_flag("--no-reduced", ga.no_reduced, "Keep edges with tau(v) contained in tau(w)");
    sub->add_flag("--force", ga.force, "Lift the n <= 8 cap");
    sub->add_option("--out", ga.out, "Write JSON here instead of stdout");
    sub->add_option("--dot", ga.dot, "Also write Graphviz DOT");
    sub->callback([&graph_verb, verb] { graph_verb = verb; });
  }

  std::string suite;
  int verify_n = 0;
  bool verify_force = false;
  auto* verify = app.add_subcommand("verify", "Run invariant suites for every size up to n");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--n", verify_n)->required();
  verify->add_flag("--force", verify_force, "Lift the n <= 8 cap");

  int kl_n = 0;
  std::string kl_out;
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis tables");
  kl->require_subcommand(1);
  auto* kl_export = kl->add_subcommand("export", "Export h_{y,w} for S_n (n <= 6) as JSON");
  kl_export->add_option("--n", kl_n)->required();
  kl_export->add_option("--out", kl_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  try {
    if (insert->parsed()) {
      cmd_insert(ins, out);
    } else if (psi_cmd->parsed()) {
      cmd_psi(psi_args, out);
    } else if (graph->parsed()) {
      return cmd_graph(graph_verb, ga, out);
    } else if (verify->parsed()) {
      return cmd_verify(suite, verify_n, verify_force, out);
    } else if (kl_export->parsed()) {
      cmd_kl_export(kl_n, kl_out, out);
    }
    return kOk;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace ggraph::cli
