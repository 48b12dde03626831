#include "deltak/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "deltak/enumerate.hpp"
#include "deltak/errors.hpp"
#include "deltak/polytope_audit.hpp"
#include "deltak/realization.hpp"

namespace deltak {
namespace {

using Clock = std::chrono::steady_clock;

/// Families for n = 1..3, every one of them.
std::vector<DeltaMatroid> small_corpus() {
  std::vector<DeltaMatroid> out;
  for (int n = 1; n <= 3; ++n) {
    auto all = all_delta_matroids(n);
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

const std::vector<DeltaMatroid>& corpus() {
  static const std::vector<DeltaMatroid> c = small_corpus();
  return c;
}

UniPoly one_plus_v() { return UniPoly({Rational(1), Rational(1)}); }

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& msg) {
    if (ok) detail = msg;
    ok = false;
  }
};

Check orbit_three_singletons(const SelftestOptions& o) {
  Check c;
  const UniPoly r = r_poly_orbit(three_singletons_family(), o.engine);
  const UniPoly want({Rational(4), Rational(8), Rational(4)});
  if (r != want) c.fail("got " + r.to_string());
  else c.detail = r.to_string();
  return c;
}

Check orbit_star_failure(const SelftestOptions& o) {
  Check c;
  const UniPoly r = r_poly_orbit(star_failure_family(), o.engine);
  const UniPoly want({Rational(9), Rational(16), Rational(6), Rational(-1), Rational(1), Rational(1)});
  if (r != want) c.fail("got " + r.to_string());
  else c.detail = r.to_string();
  return c;
}

Check rpoly_matches_interlace(const SelftestOptions& o) {
  Check c;
  std::vector<DeltaMatroid> suite = corpus();
  auto all4 = all_delta_matroids(4);
  std::mt19937_64 rng(o.sample_seed);
  std::vector<DeltaMatroid> sample;
  std::sample(all4.begin(), all4.end(), std::back_inserter(sample), o.random_n4, rng);
  suite.insert(suite.end(), sample.begin(), sample.end());
  for (const auto& d : suite) {
    const UniPoly want = one_plus_v() * d.interlace();
    const UniPoly got = r_poly_y(d, o.engine);
    if (got != want) c.fail(d.to_string() + ": " + got.to_string() + " != " + want.to_string());
  }
  if (c.ok) c.detail = std::to_string(suite.size()) + " families";
  return c;
}

Check hrr(const SelftestOptions& o) {
  Check c;
  std::size_t count = 0;
  for (const auto& d : corpus()) {
    std::vector<XClass> classes{k_polytope(d, false), k_polytope(d, true)};
    for (int p = 0; p <= d.n() + 1; ++p) classes.push_back(k_polytope(d, false) * k_wedge_qdual(d, p));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const Rational a = euler_char_HRR(classes[i], o.engine);
      const Rational b = euler_char_X(classes[i], o.engine);
      ++count;
      if (a != b) c.fail(d.to_string() + " class " + std::to_string(i) + ": " + to_string(a) + " != " + to_string(b));
    }
  }
  if (c.ok) c.detail = std::to_string(count) + " classes";
  return c;
}

Check lattice_points(const SelftestOptions& o) {
  Check c;
  for (const auto& d : corpus()) {
    const Rational chi = euler_char_X(k_polytope(d, false), o.engine);
    if (chi != Rational(static_cast<long>(d.size()))) c.fail(d.to_string() + ": chi " + to_string(chi));
  }
  return c;
}

Check interlace_integral(const SelftestOptions& o) {
  Check c;
  for (const auto& d : corpus()) {
    const UniPoly got = interlace_via_integral(d, o.engine);
    // (1+v)^n Int((1-v)/(1+v)) = sum_S (1-v)^{d(S)} (1+v)^{n-d(S)}
    UniPoly want;
    for (Subset s = 0; s < (Subset{1} << d.n()); ++s) {
      const int k = d.lattice_distance(s);
      want += UniPoly({Rational(1), Rational(-1)}).pow(k) * one_plus_v().pow(d.n() - k);
    }
    if (got != want) c.fail(d.to_string() + ": " + got.to_string() + " != " + want.to_string());
  }
  return c;
}

Check pointwise_identities(const SelftestOptions& o) {
  Check c;
  for (const auto& d : corpus()) {
    const int n = d.n();
    const ChowExpr ci = ChowExpr::chern_isotropic(d, 1, false);
    const ChowExpr ci_dual = ChowExpr::chern_isotropic(d, 1, true);
    const ChowExpr cq = ChowExpr::chern_quotient(d, false);
    const ChowExpr cq_dual = ChowExpr::chern_quotient(d, true);
    const ChowExpr trivial = ChowExpr::trivial_bundle_chern(n);
    const ChowExpr psi_hat = ChowExpr::psi(k_polytope(d, true));
    std::vector<std::pair<ChowExpr, ChowExpr>> pairs{
        {ci * cq, trivial}, {ci, cq_dual}, {psi_hat * ci, cq}};
    for (int v0 = 0; v0 <= 3; ++v0) {
      XClass wedge = x_constant(n, 0);
      for (int p = 0; p <= n + 1; ++p) {
        Rational scale = 1;
        for (int i = 0; i < p; ++i) scale *= v0;
        wedge = wedge + k_wedge_qdual(d, p) * x_constant(n, scale);
      }
      const Rational u = Rational(v0 - 1, v0 + 1);
      Rational lead = 1;
      for (int i = 0; i <= n; ++i) lead *= v0 + 1;
      pairs.emplace_back(ChowExpr::psi(wedge), (ChowExpr::chern_isotropic(d, u, false) * ci_dual.inverse()).scaled(lead));
    }
    DirectionSource src(o.engine.seed);
    for (int k = 0; k < 3; ++k) {
      const Direction dir = src.draw(n);
      for_each_signed_permutation(n, [&](const SignedPermutation& w) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (!pairs[i].first(w, dir, n).agrees_with(pairs[i].second(w, dir, n)))
            c.fail(d.to_string() + " identity " + std::to_string(i) + " at " + w.to_string());
        }
      });
    }
  }
  return c;
}

Check calibration(const SelftestOptions& o) {
  Check c;
  for (int n = 1; n <= 5; ++n) {
    const Rational chi = euler_char_X(x_constant(n, 1), o.engine);
    if (chi != 1) c.fail("chi(O_X) n=" + std::to_string(n) + " is " + to_string(chi));
  }
  for (int n = 1; n <= 3; ++n) {
    const Rational chi = euler_char_ogr_multi(
        ogr_structure_sheaf(n), [n](Subset) { return std::vector<LaurentPoly>{LaurentPoly::constant(n, 1)}; },
        o.engine)[0];
    if (chi != 1) c.fail("chi(O_OGr) n=" + std::to_string(n) + " is " + to_string(chi));
  }
  for (int n = 1; n <= 4; ++n) {
    // n! times the volume 2^n / n! of the cross-polytope.
    Rational volume = 1;
    Integer factorial = 1;
    for (int i = 1; i <= n; ++i) {
      volume *= Rational(2, i);
      factorial *= i;
    }
    const Rational want = volume * factorial;
    const Rational got = integrate_chow(ChowExpr::gamma().pow(n), n, o.engine);
    if (got != want) c.fail("integral of gamma^" + std::to_string(n) + " is " + to_string(got));
  }
  return c;
}

bool has_gap(const VeryAmpleReport& r, Subset vertex, const IntVec& point) {
  return std::any_of(r.gaps.begin(), r.gaps.end(),
                     [&](const GapWitness& g) { return g.vertex == vertex && g.point == point; });
}

Check very_ample_equivalence(const SelftestOptions& o) {
  Check c;
  std::size_t not_very_ample = 0;
  for (const auto& d : corpus()) {
    const bool va = is_very_ample(d, LatticeKind::Standard, o.engine.budget).very_ample;
    const OgrClass y = ogr_y_class(d);
    const OgrClass orbit = ogr_orbit_class(d, o.engine.budget);
    bool equal = true;
    for (Subset s = 0; s < (Subset{1} << d.n()); ++s) equal = equal && ogr_equal_at(y, orbit, s);
    if (!va) ++not_very_ample;
    if (va != equal) c.fail(d.to_string() + ": very ample " + std::to_string(va) + ", classes equal " + std::to_string(equal));
  }
  const VeryAmpleReport r = is_very_ample(three_singletons_family(), LatticeKind::Standard, o.engine.budget);
  if (r.very_ample || !has_gap(r, subset_from_elements({1}), IntVec{-1, 1, 1}))
    c.fail("witness (-1,1,1) at {1} not reported");
  if (c.ok) c.detail = std::to_string(not_very_ample) + " not very ample";
  return c;
}

Check graph_gap(const SelftestOptions& o) {
  Check c;
  const DeltaMatroid g = seven_vertex_graph_family();
  const IntVec gap{1, 1, 1, 0, 1, 1, 1};
  std::vector<IntVec> edge_vectors;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}) {
    IntVec e(7, 0);
    e[i - 1] = e[j - 1] = 1;
    edge_vectors.push_back(e);
  }
  if (member(gap, edge_vectors, o.engine.budget)) c.fail("gap point reported as a member");
  const VeryAmpleReport r = is_very_ample(g, LatticeKind::VertexSpan, o.engine.budget);
  if (r.very_ample || !has_gap(r, 0, gap)) c.fail("vertex-span audit misses the gap point");
  if (c.ok) c.detail = std::to_string(r.gaps.size()) + " gap witnesses";
  return c;
}

Check direction_independence(const SelftestOptions& o) {
  Check c;
  for (const auto& d : corpus()) {
    std::vector<std::vector<Rational>> runs;
    for (int k = 0; k < 3; ++k) {
      EngineOptions e = o.engine;
      e.directions = 1;
      e.seed = o.engine.seed + 7919 * (k + 1);
      std::vector<Rational> vals;
      vals.push_back(euler_char_X(k_polytope(d, true), e));
      vals.push_back(euler_char_HRR(k_polytope(d, false), e));
      const UniPoly r = r_poly_y(d, e);
      const UniPoly i = interlace_via_integral(d, e);
      vals.insert(vals.end(), r.coeffs().begin(), r.coeffs().end());
      vals.insert(vals.end(), i.coeffs().begin(), i.coeffs().end());
      runs.push_back(std::move(vals));
    }
    if (runs[0] != runs[1] || runs[0] != runs[2]) c.fail(d.to_string() + ": directions disagree");
  }
  return c;
}

Check transfer(const SelftestOptions& o) {
  Check c;
  for (const auto& d : corpus())
    if (!chi_transfer_check(d, o.engine)) c.fail(d.to_string());
  return c;
}

Check stretch(const SelftestOptions& o) {
  Check c;
  EngineOptions e = o.engine;
  e.jobs = o.parallel_jobs;
  e.budget.max_generators = 40;
  const UniPoly r = r_poly_orbit(seven_vertex_graph_family(), e);
  const UniPoly want({Rational(32), Rational(92), Rational(92), Rational(36), Rational(4)});
  if (r != want) c.fail("graph orbit polynomial " + r.to_string());
  const StarSearchResult search = search_star_failures(4, e);
  if (!search.errors.empty()) c.fail(std::to_string(search.errors.size()) + " instances over budget");
  if (search.failures.size() != 1 || !(search.failures[0].d == canonical_form(star_failure_family())))
    c.fail("search found " + std::to_string(search.failures.size()) + " failures");
  if (c.ok)
    c.detail = r.to_string() + "; " + std::to_string(search.checked) + " orbits, unique failure " +
               search.failures[0].d.to_string();
  return c;
}

Check benchmark(const SelftestOptions& o) {
  Check c;
  // Path graph on [6].
  const auto [d, m] = from_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  EngineOptions e = o.engine;
  e.jobs = o.parallel_jobs;
  const Rational chi = euler_char_X(k_polytope(d, false), e);
  if (chi != Rational(static_cast<long>(d.size()))) c.fail("chi " + to_string(chi));
  return c;
}

struct Criterion {
  int id;
  const char* name;
  bool gating;
  Check (*run)(const SelftestOptions&);
  double limit_seconds;
};

const Criterion kCriteria[] = {
    {1, "orbit R-polynomial of the three-singleton family", true, orbit_three_singletons, 10},
    {2, "orbit R-polynomial of the n=4 star failure", true, orbit_star_failure, 60},
    {3, "R_y = (v+1) Int, all n<=3 and sampled n=4", true, rpoly_matches_interlace, 900},
    {4, "HRR integral equals localized chi", true, hrr, 600},
    {5, "chi of the polytope class counts feasible sets", true, lattice_points, 0},
    {6, "interlace integral matches transformed Int", true, interlace_integral, 0},
    {7, "pointwise Chern and psi identities", true, pointwise_identities, 0},
    {8, "calibration: chi(O) and gamma^n", true, calibration, 0},
    {9, "very ample iff y(D) equals the orbit class", true, very_ample_equivalence, 0},
    {10, "seven-vertex graph gap point", true, graph_gap, 60},
    {11, "direction independence", true, direction_independence, 0},
    {12, "OGr/X transfer consistency", true, transfer, 0},
    {13, "graph orbit polynomial and n=4 star search", false, stretch, 3600},
    {14, "n=6 polytope chi benchmark", false, benchmark, 120},
};

}  // namespace

DeltaMatroid three_singletons_family() {
  return DeltaMatroid::create(3, {subset_from_elements({1, 2, 3}), subset_from_elements({1}),
                                  subset_from_elements({2}), subset_from_elements({3})});
}

DeltaMatroid star_failure_family() {
  std::vector<Subset> f;
  for (const auto& s : std::vector<std::vector<int>>{
           {}, {1}, {2}, {3}, {4}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}})
    f.push_back(subset_from_elements(s));
  return DeltaMatroid::create(4, f);
}

DeltaMatroid seven_vertex_graph_family() {
  return from_graph(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}).first;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
  std::vector<CriterionResult> results;
  for (const auto& cr : kCriteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), cr.id) == options.only.end())
      continue;
    CriterionResult r;
    r.id = cr.id;
    r.name = cr.name;
    r.gating = cr.gating;
    const bool wanted = cr.id == 13 ? options.stretch : cr.id == 14 ? options.benchmark : true;
    if (!wanted) {
      r.status = CheckStatus::Skip;
      r.detail = "disabled";
    } else {
      const auto t0 = Clock::now();
      try {
        const Check c = cr.run(options);
        r.status = c.ok ? CheckStatus::Pass : CheckStatus::Fail;
        r.detail = c.detail;
      } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      if (cr.limit_seconds > 0 && r.seconds > cr.limit_seconds && r.status == CheckStatus::Pass) {
        r.status = CheckStatus::Fail;
        r.detail += " (over the " + std::to_string(static_cast<int>(cr.limit_seconds)) + "s limit)";
      }
    }
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  const char* status = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "SKIP";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-4s %2d  %-10s %8.2fs  ", status, r.id, r.gating ? "gating" : "non-gating", r.seconds);
  std::string out = buf + r.name;
  if (!r.detail.empty()) out += "  (" + r.detail + ")";
  return out;
}

bool gating_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return !r.gating || r.status == CheckStatus::Pass; });
}

}  // namespace deltak
