#include "deltak/localization.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "deltak/errors.hpp"
#include "deltak/fan.hpp"
#include "deltak/parallel.hpp"

namespace deltak {

DirectionSource::DirectionSource(std::uint64_t seed) : state_(seed) {}

Direction DirectionSource::draw(int n) {
  std::mt19937_64 rng(state_);
  state_ = rng();
  std::uniform_int_distribution<std::int64_t> dist(0, (1 << 19) - 1);
  std::set<std::int64_t> used;
  Direction c;
  while (static_cast<int>(c.size()) < n) {
    const std::int64_t v = 2 * dist(rng) + 1;
    if (used.insert(v).second) c.push_back(v);
  }
  return c;
}

KSum::KSum(std::size_t outputs, Direction c) : outputs_(outputs), c_(std::move(c)), acc_(outputs) {}

void KSum::add(const KTerm& term) {
  const int k = static_cast<int>(term.denominators.size());
  Series denom = Series::constant(1, 1);
  if (k > 0) {
    denom = inv_one_minus_exp(pairing(term.denominators[0], c_), k - 1);
    for (int i = 1; i < k; ++i) denom = denom * inv_one_minus_exp(pairing(term.denominators[i], c_), k - 1);
  }
  for (std::size_t j = 0; j < outputs_; ++j) {
    if (term.numerators[j].is_zero()) continue;
    const Series total = exp_substitute(term.numerators[j], c_, k) * denom;
    for (int ord = total.start(); ord <= 0; ++ord) {
      const Rational v = total.coeff(ord);
      if (v != 0) acc_[j][ord] += v;
    }
  }
}

void KSum::merge(const KSum& other) {
  for (std::size_t j = 0; j < outputs_; ++j)
    for (const auto& [ord, v] : other.acc_[j]) acc_[j][ord] += v;
}

std::vector<Rational> KSum::finish() const {
  std::vector<Rational> out(outputs_);
  for (std::size_t j = 0; j < outputs_; ++j) {
    for (const auto& [ord, v] : acc_[j]) {
      if (ord < 0 && v != 0)
        throw CancellationError("order s^" + std::to_string(ord) + " did not cancel in a localization sum");
      if (ord == 0) out[j] = v;
    }
  }
  return out;
}

std::vector<Rational> localization_sum(const std::vector<KTerm>& terms, const Direction& c) {
  const std::size_t outputs = terms.empty() ? 0 : terms[0].numerators.size();
  KSum sum(outputs, c);
  for (const auto& t : terms) sum.add(t);
  return sum.finish();
}

std::vector<Rational> across_directions(int n, const EngineOptions& options,
                                        const std::function<std::vector<Rational>(const Direction&)>& eval) {
  DirectionSource source(options.seed);
  std::vector<Rational> first;
  const int count = std::max(1, options.directions);
  for (int round = 0; round < count; ++round) {
    std::vector<Rational> value;
    bool done = false;
    for (int attempt = 0; attempt < 16 && !done; ++attempt) {
      try {
        value = eval(source.draw(n));
        done = true;
      } catch (const DirectionError&) {
      }
    }
    if (!done) throw ContractViolation("no generic direction found after 16 attempts");
    if (round == 0)
      first = std::move(value);
    else if (value != first)
      throw ContractViolation("localization result depends on the direction");
  }
  return first;
}

std::vector<Rational> euler_char_x_multi(
    int n, const std::function<std::vector<LaurentPoly>(const SignedPermutation&)>& numerators,
    const EngineOptions& options) {
  auto result = across_directions(n, options, [&](const Direction& c) {
    const std::uint64_t total = group_order(n);
    std::vector<KSum> partial;
    std::mutex mu;
    std::size_t outputs = numerators(SignedPermutation::identity(n)).size();
    const int jobs = std::max(1, options.jobs);
    for (int i = 0; i < jobs; ++i) partial.emplace_back(outputs, c);
    parallel_chunks(total, jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
      KSum& acc = partial[worker];
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const SignedPermutation w = unrank_signed_permutation(n, idx);
        acc.add(KTerm{numerators(w), dual_basis(w)});
      }
    });
    for (int i = 1; i < jobs; ++i) partial[0].merge(partial[i]);
    return partial[0].finish();
  });
  for (const auto& v : result)
    if (!is_integer(v)) throw ContractViolation("Euler characteristic is not an integer: " + v.get_str());
  return result;
}

Rational euler_char_X(const XClass& k, const EngineOptions& options) {
  return euler_char_x_multi(
      k.n, [&](const SignedPermutation& w) { return std::vector<LaurentPoly>{k.at(w)}; }, options)[0];
}

Rational integrate_chow(const ChowExpr& expr, int n, const EngineOptions& options) {
  return across_directions(n, options, [&](const Direction& c) {
    const std::uint64_t total = group_order(n);
    const int jobs = std::max(1, options.jobs);
    std::vector<std::vector<Rational>> partial(jobs, std::vector<Rational>(n + 1));
    parallel_chunks(total, jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
      auto& acc = partial[worker];
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        const SignedPermutation w = unrank_signed_permutation(n, idx);
        Rational euler = 1;
        for (const auto& m : dual_basis(w)) euler *= pairing(m, c);
        if (euler == 0) throw DirectionError("tangent weight pairs to zero");
        const Series s = expr(w, c, n);
        for (int j = 0; j <= n; ++j) acc[j] += s.coeff(j) / euler;
      }
    });
    std::vector<Rational> sum(n + 1);
    for (const auto& p : partial)
      for (int j = 0; j <= n; ++j) sum[j] += p[j];
    for (int j = 0; j < n; ++j)
      if (sum[j] != 0) throw CancellationError("degree-" + std::to_string(j) + " part of a Chow integral did not cancel");
    return std::vector<Rational>{sum[n]};
  })[0];
}

Rational euler_char_HRR(const XClass& k, const EngineOptions& options) {
  const ChowExpr integrand = ChowExpr::psi(k) * ChowExpr::gamma_geometric(k.n);
  Rational v = integrate_chow(integrand, k.n, options);
  v /= Rational(Integer(1) << k.n);
  return v;
}

std::vector<Rational> euler_char_ogr_multi(const OgrClass& cls,
                                           const std::function<std::vector<LaurentPoly>(Subset)>& twist,
                                           const EngineOptions& options) {
  std::vector<std::pair<Subset, const std::vector<HilbertPiece>*>> points;
  for (const auto& [s, pieces] : cls.at) points.emplace_back(s, &pieces);
  std::size_t outputs = twist(0).size();
  auto result = across_directions(cls.n, options, [&](const Direction& c) {
    const int jobs = std::max(1, options.jobs);
    std::vector<KSum> partial;
    for (int i = 0; i < jobs; ++i) partial.emplace_back(outputs, c);
    parallel_chunks(points.size(), jobs, [&](int worker, std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto tw = twist(points[i].first);
        for (const auto& piece : *points[i].second) {
          KTerm term{{}, piece.denominators};
          for (const auto& t : tw) term.numerators.push_back(piece.numerator * t);
          partial[worker].add(term);
        }
      }
    });
    for (int i = 1; i < jobs; ++i) partial[0].merge(partial[i]);
    return partial[0].finish();
  });
  for (const auto& v : result)
    if (!is_integer(v)) throw ContractViolation("Euler characteristic is not an integer: " + v.get_str());
  return result;
}

namespace {

UniPoly from_coeffs(const std::vector<Rational>& c) { return UniPoly(c); }

std::vector<LaurentPoly> twisted_wedges(int n, Subset s, const LaurentPoly& twist) {
  auto coeffs = wedge_qdual_coefficients(n, s);
  for (auto& c : coeffs) c *= twist;
  return coeffs;
}

}  // namespace

UniPoly r_poly_y(const DeltaMatroid& d, const EngineOptions& options) {
  const int n = d.n();
  return from_coeffs(euler_char_x_multi(
      n,
      [&](const SignedPermutation& w) {
        const Subset s = d.minimal_feasible(w);
        return twisted_wedges(n, s, polytope_character(n, s, false));
      },
      options));
}

UniPoly r_poly_y_ogr(const DeltaMatroid& d, const EngineOptions& options) {
  const int n = d.n();
  return from_coeffs(euler_char_ogr_multi(
      ogr_y_class(d), [n](Subset s) { return twisted_wedges(n, s, ogr_o1(n, s)); }, options));
}

UniPoly r_poly_orbit(const DeltaMatroid& d, const EngineOptions& options) {
  const int n = d.n();
  return from_coeffs(euler_char_ogr_multi(
      ogr_orbit_class(d, options.budget, options.jobs), [n](Subset s) { return twisted_wedges(n, s, ogr_o1(n, s)); },
      options));
}

UniPoly interlace_via_integral(const DeltaMatroid& d, const EngineOptions& options) {
  const int n = d.n();
  std::vector<std::pair<Rational, Rational>> nodes;
  for (int v0 = 0; v0 <= n + 1; ++v0) {
    const ChowExpr integrand = ChowExpr::chern_isotropic(d, v0, true) * ChowExpr::gamma_geometric(n);
    nodes.emplace_back(v0, integrate_chow(integrand, n, options));
  }
  return interpolate(nodes, n);
}

UniPoly interlace_transform(const UniPoly& interlace, int n) {
  const UniPoly one_minus({Rational(1), Rational(-1)});
  const UniPoly one_plus({Rational(1), Rational(1)});
  UniPoly total;
  for (int k = 0; k <= interlace.degree(); ++k)
    total += one_minus.pow(k) * one_plus.pow(n - k) * interlace.coeff(k);
  return total;
}

bool chi_transfer_check(const DeltaMatroid& d, const EngineOptions& options) {
  const int n = d.n();
  const auto ogr = euler_char_ogr_multi(
      ogr_y_class(d), [n](Subset s) { return twisted_wedges(n, s, ogr_o2(n, s)); }, options);
  const auto x = euler_char_x_multi(
      n,
      [&](const SignedPermutation& w) {
        const Subset s = d.minimal_feasible(w);
        return twisted_wedges(n, s, polytope_character(n, s, true));
      },
      options);
  return ogr == x;
}

}  // namespace deltak
