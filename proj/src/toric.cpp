#include "deltak/toric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "deltak/errors.hpp"
#include "deltak/linalg.hpp"
#include "deltak/lp.hpp"

namespace deltak {

namespace {

struct MonomialOrder {
  std::vector<long long> weights;  // weights[0] unused (t block)

  // true iff a > b
  bool greater(const IntVec& a, const IntVec& b) const {
    if (a[0] != b[0]) return a[0] > b[0];
    long long wa = 0, wb = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      wa += weights[i] * a[i];
      wb += weights[i] * b[i];
    }
    if (wa != wb) return wa > wb;
    for (std::size_t i = a.size(); i-- > 1;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

bool divides(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool coprime(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Cancels the common monomial factor (all variables are units modulo the
// saturated ideal) and orients the binomial. Returns false for zero.
bool normalize(Binomial& b, const MonomialOrder& ord) {
  if (b.lead == b.trail) return false;
  for (std::size_t i = 0; i < b.lead.size(); ++i) {
    const int m = std::min(b.lead[i], b.trail[i]);
    b.lead[i] -= m;
    b.trail[i] -= m;
  }
  if (ord.greater(b.trail, b.lead)) std::swap(b.lead, b.trail);
  return true;
}

bool reduce(Binomial& b, const std::vector<Binomial>& basis, const MonomialOrder& ord) {
  while (true) {
    if (!normalize(b, ord)) return false;
    bool changed = false;
    for (const auto& g : basis) {
      if (divides(g.lead, b.lead)) {
        for (std::size_t i = 0; i < b.lead.size(); ++i) b.lead[i] += g.trail[i] - g.lead[i];
        changed = true;
        break;
      }
    }
    if (!changed) return true;
  }
}

std::vector<IntVec> minimize_monomials(std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

struct KPolyCalc {
  const std::vector<IntVec>& degrees;
  int nvars_out;
  std::map<std::vector<IntVec>, LaurentPoly> memo;

  LaurentPoly monomial_degree(const IntVec& m) const {
    IntVec e(nvars_out, 0);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] != 0) e = e + scaled(degrees[j], m[j]);
    return LaurentPoly::monomial(e);
  }

  LaurentPoly run(std::vector<IntVec> gens) {
    gens = minimize_monomials(std::move(gens));
    auto it = memo.find(gens);
    if (it != memo.end()) return it->second;
    LaurentPoly result = LaurentPoly::constant(nvars_out, 1);
    // Pivot on the variable shared by the most generators.
    const std::size_t k = degrees.size();
    std::size_t pivot = k;
    int best = 1;
    for (std::size_t j = 0; j < k; ++j) {
      int count = 0;
      for (const auto& g : gens) count += g[j] > 0;
      if (count > best) {
        best = count;
        pivot = j;
      }
    }
    if (pivot == k) {
      for (const auto& g : gens) result *= LaurentPoly::constant(nvars_out, 1) - monomial_degree(g);
    } else {
      std::vector<IntVec> plus = gens;
      IntVec xj(k, 0);
      xj[pivot] = 1;
      plus.push_back(xj);
      std::vector<IntVec> colon = gens;
      for (auto& g : colon)
        if (g[pivot] > 0) g[pivot] -= 1;
      result = run(std::move(plus)) + monomial_degree(xj) * run(std::move(colon));
    }
    memo.emplace(std::move(gens), result);
    return result;
  }
};

}  // namespace

LaurentPoly k_polynomial(const std::vector<IntVec>& gens, const std::vector<IntVec>& degrees) {
  const int nvars = degrees.empty() ? 0 : static_cast<int>(degrees[0].size());
  KPolyCalc calc{degrees, nvars, {}};
  return calc.run(gens);
}

std::vector<Binomial> toric_groebner_basis(const std::vector<IntVec>& A, const ToricBudget& budget) {
  const std::size_t k = A.size();
  if (k == 0) return {};
  const int dim = static_cast<int>(A[0].size());
  const IntVec ell = positive_grading(A, dim);
  if (ell.empty()) throw InvalidInputError("semigroup generators admit no positive grading");

  MonomialOrder ord;
  ord.weights.assign(k + 1, 0);
  for (std::size_t j = 0; j < k; ++j) ord.weights[j + 1] = dot(ell, A[j]);

  std::vector<Binomial> basis;
  std::vector<Binomial> pending;
  for (const auto& z : integer_kernel(A)) {
    Binomial b{IntVec(k + 1, 0), IntVec(k + 1, 0)};
    for (std::size_t j = 0; j < k; ++j) (z[j] > 0 ? b.lead : b.trail)[j + 1] = std::abs(z[j]);
    pending.push_back(std::move(b));
  }
  if (pending.empty()) return {};
  // t * x_1 ... x_k - 1 saturates the lattice ideal.
  Binomial sat{IntVec(k + 1, 1), IntVec(k + 1, 0)};
  pending.push_back(sat);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  auto insert = [&](Binomial b) {
    if (!reduce(b, basis, ord)) return;
    const std::size_t id = basis.size();
    basis.push_back(std::move(b));
    for (std::size_t i = 0; i < id; ++i) pairs.emplace_back(i, id);
  };
  for (auto& b : pending) insert(std::move(b));
  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.max_pairs) throw ResourceError("Groebner basis pair budget exhausted");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Binomial& f = basis[i];
    const Binomial& g = basis[j];
    if (coprime(f.lead, g.lead)) continue;
    Binomial s{IntVec(k + 1), IntVec(k + 1)};
    for (std::size_t v = 0; v <= k; ++v) {
      const int l = std::max(f.lead[v], g.lead[v]);
      s.lead[v] = l - f.lead[v] + f.trail[v];
      s.trail[v] = l - g.lead[v] + g.trail[v];
    }
    insert(std::move(s));
  }

  // Elements free of t generate the toric ideal; keep them minimal.
  std::vector<Binomial> result;
  for (const auto& b : basis)
    if (b.lead[0] == 0 && b.trail[0] == 0) result.push_back(b);
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < result.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < result.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(result[j].lead, result[i].lead) && (result[j].lead != result[i].lead || j < i)) redundant = true;
    }
    if (!redundant) {
      Binomial b{IntVec(result[i].lead.begin() + 1, result[i].lead.end()),
                 IntVec(result[i].trail.begin() + 1, result[i].trail.end())};
      minimal.push_back(std::move(b));
    }
  }
  return minimal;
}

HilbertSeriesRep semigroup_hilbert(const std::vector<IntVec>& A, const ToricBudget& budget) {
  if (A.empty()) throw InvalidInputError("semigroup needs at least one generator");
  if (A.size() > budget.max_generators)
    throw ResourceError("semigroup has " + std::to_string(A.size()) + " generators, above the configured bound");
  const int dim = static_cast<int>(A[0].size());
  for (const auto& a : A)
    if (is_zero(a)) throw InvalidInputError("semigroup generator is zero");
  std::vector<IntVec> leads;
  for (const auto& b : toric_groebner_basis(A, budget)) leads.push_back(b.lead);
  std::vector<IntVec> degrees;
  for (const auto& a : A) degrees.push_back(-a);
  HilbertSeriesRep rep;
  rep.dim = dim;
  rep.pieces.push_back({k_polynomial(leads, degrees), A});
  return rep;
}

bool member(const IntVec& x, const std::vector<IntVec>& A, const ToricBudget& budget) {
  if (is_zero(x)) return true;
  if (A.empty()) return false;
  const int dim = static_cast<int>(x.size());
  const IntVec ell = positive_grading(A, dim);
  if (ell.empty()) throw InvalidInputError("semigroup generators admit no positive grading");
  if (!in_cone(A, x)) return false;
  std::map<IntVec, bool> memo;
  std::size_t states = 0;
  std::function<bool(const IntVec&)> reach = [&](const IntVec& y) -> bool {
    if (is_zero(y)) return true;
    if (dot(ell, y) <= 0) return false;
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    if (++states > budget.max_states) throw ResourceError("membership search state budget exhausted");
    bool ok = false;
    for (const auto& a : A) {
      if (reach(y - a)) {
        ok = true;
        break;
      }
    }
    memo.emplace(y, ok);
    return ok;
  };
  return reach(x);
}

std::vector<IntVec> minimal_generators(const std::vector<IntVec>& A, const ToricBudget& budget) {
  std::set<IntVec> uniq;
  for (const auto& a : A)
    if (!is_zero(a)) uniq.insert(a);
  std::vector<IntVec> all(uniq.begin(), uniq.end());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!member(all[i], others, budget)) out.push_back(all[i]);
  }
  return out;
}

std::vector<IntVec> enumerate_semigroup(const std::vector<IntVec>& A, const IntVec& grading, int level) {
  std::set<IntVec> seen;
  const int dim = static_cast<int>(grading.size());
  std::vector<IntVec> frontier{IntVec(dim, 0)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& y : frontier) {
      for (const auto& a : A) {
        IntVec z = y + a;
        if (dot(grading, z) > level) continue;
        if (seen.insert(z).second) next.push_back(std::move(z));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace deltak
