// deltak: command-line front end. Every command prints one JSON report.
// Exit codes: 0 ok, 1 contract violation, 2 input error, 3 resource budget.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/fan.hpp"
#include "deltak/json_io.hpp"
#include "deltak/localization.hpp"
#include "deltak/parallel.hpp"
#include "deltak/polytope_audit.hpp"
#include "deltak/realization.hpp"
#include "deltak/selftest.hpp"

using namespace deltak;

namespace {

struct Config {
  std::string input;
  std::string output;
  int jobs = 0;
  int directions = 3;
  std::uint64_t seed = EngineOptions{}.seed;
  std::size_t max_generators = ToricBudget{}.max_generators;
  std::size_t max_pairs = ToricBudget{}.max_pairs;
  std::size_t max_states = ToricBudget{}.max_states;

  std::string mode = "y";
  std::string klass = "polytope";
  std::string theorem = "A";
  std::string lattice = "standard";
  int n = 3;
  int normal_level = 0;
  bool long_run = false;
  bool no_stretch = false;
  bool no_bench = false;
  std::vector<int> only;

  EngineOptions engine() const {
    EngineOptions e;
    e.jobs = jobs > 0 ? jobs : default_jobs();
    e.directions = directions;
    e.seed = seed;
    e.budget = {max_generators, max_pairs, max_states};
    return e;
  }
};

Json engine_json(const EngineOptions& e) {
  return {{"jobs", e.jobs}, {"directions", e.directions}, {"seed", e.seed}};
}

// Engine results are only returned once all directions agreed; with a
// single direction there is nothing to compare.
Json agreed(const EngineOptions& e) { return e.directions >= 2 ? Json(true) : Json(nullptr); }

DeltaMatroid load(const Config& c, Json& report) {
  if (c.input.empty()) throw InvalidInputError("--input is required");
  const ParsedInput in = read_input_file(c.input);
  report["input"] = to_json(in.dm);
  if (in.matrix) report["input"]["matrix"] = to_json(*in.matrix);
  return in.dm;
}

void require_small(int n, int limit, const char* what) {
  if (n > limit) throw InvalidInputError(std::string(what) + " supports n <= " + std::to_string(limit));
}

Json cmd_validate(const Config& c) {
  Json report;
  const Json j = read_json_file(c.input);
  if (auto raw = raw_family(j)) {
    const ValidationResult v = validate(raw->first, raw->second);
    report["n"] = raw->first;
    report["valid"] = v.valid;
    report["feasible_count"] = raw->second.size();
    if (v.bad_edge)
      report["bad_edge"] = {subset_elements(v.bad_edge->first), subset_elements(v.bad_edge->second)};
  } else {
    const ParsedInput in = parse_input(j);
    report["n"] = in.dm.n();
    report["valid"] = true;
    report["feasible"] = to_json(in.dm)["feasible"];
    report["feasible_count"] = in.dm.size();
  }
  return report;
}

Json cmd_interlace(const Config& c) {
  Json report;
  const DeltaMatroid d = load(c, report);
  report["Int"] = poly_to_json(d.interlace());
  return report;
}

Json cmd_chi(const Config& c) {
  Json report;
  const DeltaMatroid d = load(c, report);
  const EngineOptions e = c.engine();
  XClass k;
  if (c.klass == "polytope") k = k_polytope(d, false);
  else if (c.klass == "doubled") k = k_polytope(d, true);
  else throw InvalidInputError("--class must be polytope or doubled");
  report["class"] = c.klass;
  report["chi"] = to_string(euler_char_X(k, e));
  report["directions_agreed"] = agreed(e);
  report["engine"] = engine_json(e);
  return report;
}

Json cmd_rpoly(const Config& c) {
  Json report;
  const DeltaMatroid d = load(c, report);
  const EngineOptions e = c.engine();
  UniPoly r;
  if (c.mode == "y") r = r_poly_y(d, e);
  else if (c.mode == "orbit") r = r_poly_orbit(d, e);
  else throw InvalidInputError("--mode must be y or orbit");
  report["mode"] = c.mode;
  report["R"] = poly_to_json(r);
  report["expected_from_interlace"] = poly_to_json(UniPoly({Rational(1), Rational(1)}) * d.interlace());
  report["directions_agreed"] = agreed(e);
  report["engine"] = engine_json(e);
  return report;
}

Json cmd_verify(const Config& c, int& exit_code) {
  require_small(c.n, 4, "verify");
  if (c.n == 4 && !c.long_run) throw InvalidInputError("n = 4 needs --long");
  const EngineOptions e = c.engine();
  std::size_t checked = 0;
  Json failures = Json::array();
  auto record = [&](const DeltaMatroid& d, const std::string& what) {
    failures.push_back({{"input", to_json(d)}, {"detail", what}, {"seed", e.seed}});
  };
  enumerate_all(c.n, [&](const DeltaMatroid& d) {
    ++checked;
    if (c.theorem == "A") {
      const UniPoly want = UniPoly({Rational(1), Rational(1)}) * d.interlace();
      const UniPoly got = r_poly_y(d, e);
      if (got != want) record(d, got.to_string() + " != " + want.to_string());
    } else if (c.theorem == "B") {
      std::vector<XClass> classes{k_polytope(d, false), k_polytope(d, true)};
      for (int p = 0; p <= d.n() + 1; ++p) classes.push_back(k_polytope(d, false) * k_wedge_qdual(d, p));
      for (std::size_t i = 0; i < classes.size(); ++i) {
        const Rational a = euler_char_HRR(classes[i], e);
        const Rational b = euler_char_X(classes[i], e);
        if (a != b) record(d, "class " + std::to_string(i) + ": " + to_string(a) + " != " + to_string(b));
      }
    } else if (c.theorem == "intersection") {
      const UniPoly got = interlace_via_integral(d, e);
      const UniPoly want = interlace_transform(d.interlace(), d.n());
      if (got != want) record(d, got.to_string() + " != " + want.to_string());
    } else {
      throw InvalidInputError("--theorem must be A, B or intersection");
    }
  });
  if (!failures.empty()) exit_code = 1;
  return {{"theorem", c.theorem}, {"n", c.n}, {"checked", checked}, {"failures", failures.size()},
          {"failure_payloads", failures}, {"directions_agreed", agreed(e)}, {"engine", engine_json(e)}};
}

Json cmd_audit(const Config& c) {
  Json report;
  const DeltaMatroid d = load(c, report);
  LatticeKind kind;
  if (c.lattice == "standard") kind = LatticeKind::Standard;
  else if (c.lattice == "vertex") kind = LatticeKind::VertexSpan;
  else throw InvalidInputError("--lattice must be standard or vertex");
  const EngineOptions e = c.engine();
  const VeryAmpleReport r = is_very_ample(d, kind, e.budget);
  report["lattice"] = c.lattice;
  report["very_ample"] = r.very_ample;
  Json gaps = Json::array();
  for (const auto& g : r.gaps) gaps.push_back({{"vertex", subset_elements(g.vertex)}, {"gap_point", g.point}});
  report["gaps"] = gaps;
  Json series = Json::array();
  for (Subset s : d.feasible()) {
    const RationalCone cone = tangent_cone(d, s);
    if (cone.generators().empty()) continue;
    Json pieces = Json::array();
    for (const auto& p : cone_hilbert(cone).pieces)
      pieces.push_back({{"numerator", laurent_to_json(p.numerator)}, {"denominators", p.denominators}});
    series.push_back({{"vertex", subset_elements(s)}, {"pieces", pieces}});
  }
  report["tangent_cone_hilbert_series"] = series;
  if (c.normal_level >= 2) {
    report["normal_up_to_level"] = c.normal_level;
    report["normal"] = is_normal_bounded(d, c.normal_level);
  }
  return report;
}

Json cmd_classes_dump(const Config& c) {
  Json report;
  const DeltaMatroid d = load(c, report);
  require_small(d.n(), 3, "classes dump");
  const int n = d.n();
  const XClass p = k_polytope(d, false), ph = k_polytope(d, true), iso = k_isotropic(d);
  Json points = Json::array();
  for_each_signed_permutation(n, [&](const SignedPermutation& w) {
    Json wedge = Json::array();
    for (int k = 0; k <= n + 1; ++k) wedge.push_back(laurent_to_json(k_wedge_qdual(d, k).at(w)));
    points.push_back({{"w", w.images()},
                      {"minimal_feasible", subset_elements(d.minimal_feasible(w))},
                      {"polytope", laurent_to_json(p.at(w))},
                      {"doubled", laurent_to_json(ph.at(w))},
                      {"isotropic", laurent_to_json(iso.at(w))},
                      {"wedge_qdual", wedge}});
  });
  report["fixed_points"] = points;
  return report;
}

Json cmd_moment_graph(const Config& c) {
  require_small(c.n, 3, "moment-graph");
  if (c.n < 1) throw InvalidInputError("n must be positive");
  Json vertices = Json::array(), edges = Json::array();
  for_each_signed_permutation(c.n, [&](const SignedPermutation& w) {
    vertices.push_back({{"w", w.images()}, {"tangent_weights", dual_basis(w)}});
    for (const auto& e : moment_edges(w))
      if (w < e.to) edges.push_back({{"from", w.images()}, {"to", e.to.images()}, {"label", e.label}});
  });
  return {{"n", c.n}, {"vertices", vertices}, {"edges", edges}};
}

Json cmd_search_star(const Config& c, int& exit_code) {
  if (c.n == 4 && !c.long_run) throw InvalidInputError("n = 4 needs --long");
  const EngineOptions e = c.engine();
  const StarSearchResult r = search_star_failures(c.n, e);
  Json failures = Json::array(), errors = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"input", to_json(f.d)}, {"R_orbit", poly_to_json(f.orbit_r)}, {"expected", poly_to_json(f.expected)}});
  for (const auto& [d, msg] : r.errors) errors.push_back({{"input", to_json(d)}, {"error", msg}});
  if (!r.errors.empty()) exit_code = 3;
  return {{"n", c.n}, {"orbits_checked", r.checked}, {"failures", failures}, {"resource_errors", errors},
          {"engine", engine_json(e)}};
}

Json cmd_selftest(const Config& c, int& exit_code) {
  SelftestOptions o;
  o.engine.seed = c.seed;
  o.parallel_jobs = c.jobs > 0 ? c.jobs : default_jobs();
  o.stretch = !c.no_stretch;
  o.benchmark = !c.no_bench;
  o.only = c.only;
  o.on_result = [](const CriterionResult& r) { std::cerr << format_result(r) << std::endl; };
  const auto results = run_selftest(o);
  Json rows = Json::array();
  for (const auto& r : results) {
    const char* status = r.status == CheckStatus::Pass ? "pass" : r.status == CheckStatus::Fail ? "fail" : "skip";
    rows.push_back({{"id", r.id}, {"name", r.name}, {"gating", r.gating}, {"status", status},
                    {"seconds", r.seconds}, {"detail", r.detail}});
  }
  const bool ok = gating_passed(results);
  if (!ok) exit_code = 1;
  return {{"criteria", rows}, {"gating_passed", ok}};
}

Json cmd_bench(const Config& c) {
  require_small(c.n, 8, "bench");
  // Path graph on [n]: a realizable delta-matroid with a known count.
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < c.n; ++i) edges.emplace_back(i, i + 1);
  const DeltaMatroid d = from_graph(c.n, edges).first;
  const EngineOptions e = c.engine();
  const auto t0 = std::chrono::steady_clock::now();
  const Rational chi = euler_char_X(k_polytope(d, false), e);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {{"n", c.n}, {"fixed_points", group_order(c.n)}, {"chi", to_string(chi)},
          {"feasible_count", d.size()}, {"correct", chi == static_cast<long>(d.size())},
          {"seconds", secs}, {"engine", engine_json(e)}};
}

void add_engine_flags(CLI::App* app, Config& c) {
  app->add_option("--jobs", c.jobs, "worker threads (default: DELTAK_JOBS or hardware)");
  app->add_option("--directions", c.directions, "independent directions that must agree")->check(CLI::Range(1, 16));
  app->add_option("--seed", c.seed, "direction seed");
  app->add_option("--max-generators", c.max_generators, "semigroup generator budget");
  app->add_option("--max-pairs", c.max_pairs, "Groebner pair budget");
  app->add_option("--max-states", c.max_states, "membership search budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-matroid invariants by torus localization"};
  app.require_subcommand(1);
  Config c;
  app.add_option("-o,--output", c.output, "write the JSON report to a file");

  auto* validate_cmd = app.add_subcommand("validate", "check the delta-matroid polytope condition");
  validate_cmd->add_option("--input", c.input)->required();
  auto* interlace_cmd = app.add_subcommand("interlace", "interlace polynomial");
  interlace_cmd->add_option("--input", c.input)->required();
  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a polytope class");
  chi_cmd->add_option("--input", c.input)->required();
  chi_cmd->add_option("--class", c.klass, "polytope | doubled");
  add_engine_flags(chi_cmd, c);
  auto* rpoly_cmd = app.add_subcommand("rpoly", "R-polynomial");
  rpoly_cmd->add_option("--input", c.input)->required();
  rpoly_cmd->add_option("--mode", c.mode, "y | orbit");
  add_engine_flags(rpoly_cmd, c);
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive identity suites");
  verify_cmd->add_option("--theorem", c.theorem, "A | B | intersection");
  verify_cmd->add_option("--n", c.n)->check(CLI::Range(1, 4));
  verify_cmd->add_flag("--long", c.long_run, "allow n = 4");
  add_engine_flags(verify_cmd, c);
  auto* polytope_cmd = app.add_subcommand("polytope", "polytope tools");
  polytope_cmd->require_subcommand(1);
  auto* audit_cmd = polytope_cmd->add_subcommand("audit", "very ampleness certificates");
  audit_cmd->add_option("--input", c.input)->required();
  audit_cmd->add_option("--lattice", c.lattice, "standard | vertex");
  audit_cmd->add_option("--normal-level", c.normal_level, "also test normality up to this level");
  add_engine_flags(audit_cmd, c);
  auto* classes_cmd = app.add_subcommand("classes", "class inspection");
  classes_cmd->require_subcommand(1);
  auto* dump_cmd = classes_cmd->add_subcommand("dump", "fixed-point restrictions as JSON (n <= 3)");
  dump_cmd->add_option("--input", c.input)->required();
  auto* moment_cmd = app.add_subcommand("moment-graph", "moment graph of X_{B_n} as JSON (n <= 3)");
  moment_cmd->add_option("--n", c.n)->required();
  auto* search_cmd = app.add_subcommand("search-star", "families where the orbit R-polynomial differs");
  search_cmd->add_option("--n", c.n)->check(CLI::Range(1, 4));
  search_cmd->add_flag("--long", c.long_run, "allow n = 4");
  add_engine_flags(search_cmd, c);
  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_flag("--no-stretch", c.no_stretch);
  selftest_cmd->add_flag("--no-bench", c.no_bench);
  selftest_cmd->add_option("--only", c.only, "criterion ids");
  selftest_cmd->add_option("--jobs", c.jobs);
  selftest_cmd->add_option("--seed", c.seed);
  auto* bench_cmd = app.add_subcommand("bench", "chi of the polytope class of a path graph");
  bench_cmd->add_option("--n", c.n)->check(CLI::Range(1, 8));
  add_engine_flags(bench_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  int exit_code = 0;
  Json report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "validate") report = cmd_validate(c);
    else if (name == "interlace") report = cmd_interlace(c);
    else if (name == "chi") report = cmd_chi(c);
    else if (name == "rpoly") report = cmd_rpoly(c);
    else if (name == "verify") report = cmd_verify(c, exit_code);
    else if (name == "polytope") report = cmd_audit(c);
    else if (name == "classes") report = cmd_classes_dump(c);
    else if (name == "moment-graph") report = cmd_moment_graph(c);
    else if (name == "search-star") report = cmd_search_star(c, exit_code);
    else if (name == "selftest") report = cmd_selftest(c, exit_code);
    else if (name == "bench") report = cmd_bench(c);
    report["command"] = name;
  } catch (const InvalidInputError& e) {
    report = {{"error", "invalid input"}, {"message", e.what()}};
    exit_code = 2;
  } catch (const ResourceError& e) {
    report = {{"error", "resource budget exhausted"}, {"message", e.what()}};
    exit_code = 3;
  } catch (const std::exception& e) {
    report = {{"error", "contract violation"}, {"message", e.what()}};
    exit_code = 1;
  }
  report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = report.dump(2);
  if (c.output.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream out(c.output);
    if (!out) {
      std::cerr << "cannot write " << c.output << std::endl;
      return 2;
    }
    out << text << std::endl;
  }
  return exit_code;
}
