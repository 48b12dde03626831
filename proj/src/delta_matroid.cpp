#include "deltak/delta_matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include "deltak/errors.hpp"
#include "deltak/lp.hpp"

namespace deltak {

Subset subset_from_elements(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSize) throw InvalidInputError("element out of range: " + std::to_string(e));
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) out.push_back(i + 1);
  return out;
}

int subset_size(Subset s) { return std::popcount(s); }

IntVec indicator(int n, Subset s) {
  IntVec v(n);
  for (int i = 0; i < n; ++i) v[i] = (s >> i) & 1;
  return v;
}

IntVec signed_indicator(int n, Subset s) {
  IntVec v(n);
  for (int i = 0; i < n; ++i) v[i] = ((s >> i) & 1) ? 1 : -1;
  return v;
}

std::string subset_to_string(Subset s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int e : subset_elements(s)) {
    out << (first ? "" : ",") << e;
    first = false;
  }
  out << '}';
  return out.str();
}

namespace {

std::vector<Subset> normalized_family(int n, std::vector<Subset> family) {
  if (n < 1 || n > kMaxGroundSize)
    throw InvalidInputError("ground size must be in [1, " + std::to_string(kMaxGroundSize) + "]");
  if (family.empty()) throw InvalidInputError("family of feasible sets is empty");
  const Subset full = (Subset{1} << n) - 1;
  for (Subset s : family)
    if ((s & ~full) != 0) throw InvalidInputError("subset " + subset_to_string(s) + " is not inside [n]");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

bool is_polytope_edge(int n, const std::vector<Subset>& family, Subset a, Subset b) {
  const Subset diff = a ^ b;
  const int k = subset_size(diff);
  if (k <= 1) return k == 1;
  // Vertices on the cube face spanned by a and b form a face of the polytope.
  std::vector<Subset> face;
  for (Subset s : family)
    if (((s ^ a) & ~diff) == 0) face.push_back(s);
  auto has = [&](Subset s) { return std::binary_search(face.begin(), face.end(), s); };
  if (k == 2) return !(has(a ^ (diff & (0 - diff))) && has(b ^ (diff & (0 - diff))));
  // A second antipodal pair in the face shares the midpoint of [a, b].
  for (Subset s : face)
    if (s != a && s != b && has(s ^ diff)) return false;
  // max sum_{s != a,b} λ_s subject to sum λ_s e_s = (e_a + e_b)/2, sum λ_s = 1.
  const auto elems = subset_elements(diff);
  const std::size_t m = face.size();
  QMatrix A(elems.size() + 1, QVector(m));
  QVector rhs(elems.size() + 1);
  QVector cost(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < elems.size(); ++r) A[r][j] = (face[j] >> (elems[r] - 1)) & 1;
    A[elems.size()][j] = 1;
    if (face[j] != a && face[j] != b) cost[j] = -1;
  }
  for (std::size_t r = 0; r < elems.size(); ++r) {
    const int bit = elems[r] - 1;
    rhs[r] = Rational(((a >> bit) & 1) + ((b >> bit) & 1), 2);
  }
  rhs[elems.size()] = 1;
  (void)n;
  auto res = solve_standard_lp(A, rhs, cost);
  if (res.status != LpStatus::Optimal) throw ConsistencyError("edge LP failed for a segment between vertices");
  return res.value == 0;
}

ValidationResult validate(int n, const std::vector<Subset>& family_in) {
  const auto family = normalized_family(n, family_in);
  ValidationResult result;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (subset_size(family[i] ^ family[j]) <= 2) continue;
      if (is_polytope_edge(n, family, family[i], family[j])) {
        result.valid = false;
        result.bad_edge = std::make_pair(family[i], family[j]);
        return result;
      }
    }
  }
  return result;
}

bool satisfies_symmetric_exchange(int n, const std::vector<Subset>& family_in) {
  const auto family = normalized_family(n, family_in);
  std::vector<char> member(std::size_t{1} << n, 0);
  for (Subset s : family) member[s] = 1;
  for (Subset s : family) {
    for (Subset t : family) {
      const Subset diff = s ^ t;
      for (int i : subset_elements(diff)) {
        const Subset bi = Subset{1} << (i - 1);
        bool ok = false;
        for (int j : subset_elements(diff)) {
          const Subset bj = Subset{1} << (j - 1);
          if (member[s ^ bi ^ (i == j ? 0 : bj)]) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

DeltaMatroid::DeltaMatroid(int n, std::vector<Subset> family)
    : n_(n), feasible_(std::move(family)), member_(std::size_t{1} << n, 0) {
  for (Subset s : feasible_) member_[s] = 1;
}

DeltaMatroid DeltaMatroid::create(int n, std::vector<Subset> family) {
  auto fam = normalized_family(n, std::move(family));
  auto check = validate(n, fam);
  if (!check.valid) {
    throw InvalidInputError("not a delta-matroid: segment " + subset_to_string(check.bad_edge->first) +
                            " -- " + subset_to_string(check.bad_edge->second) +
                            " is an edge not parallel to e_i or e_i±e_j");
  }
  return DeltaMatroid(n, std::move(fam));
}

DeltaMatroid DeltaMatroid::unchecked(int n, std::vector<Subset> family) {
  return DeltaMatroid(n, normalized_family(n, std::move(family)));
}

int DeltaMatroid::lattice_distance(Subset s) const {
  int best = n_ + 1;
  for (Subset f : feasible_) best = std::min(best, subset_size(s ^ f));
  return best;
}

UniPoly DeltaMatroid::interlace() const {
  std::vector<Rational> c(n_ + 1);
  const Subset count = Subset{1} << n_;
  for (Subset s = 0; s < count; ++s) c[lattice_distance(s)] += 1;
  return UniPoly(std::move(c));
}

Subset DeltaMatroid::argmin_with_weights(const std::vector<long long>& weights) const {
  long long best = 0;
  Subset arg = 0;
  bool tie = false;
  bool first = true;
  for (Subset f : feasible_) {
    long long score = 0;
    for (int i = 0; i < n_; ++i)
      if ((f >> i) & 1) score += weights[i];
    if (first || score < best) {
      best = score;
      arg = f;
      tie = false;
      first = false;
    } else if (score == best) {
      tie = true;
    }
  }
  if (tie)
    throw ConsistencyError("tie for the w-minimal feasible set; the family is not a delta-matroid");
  return arg;
}

Subset DeltaMatroid::minimal_feasible(const SignedPermutation& w) const {
  std::vector<long long> weights(n_);
  for (int k = 1; k <= n_; ++k) {
    const int x = w(k);
    weights[std::abs(x) - 1] = static_cast<long long>(n_ + 1 - k) * (x > 0 ? 1 : -1);
  }
  return argmin_with_weights(weights);
}

Subset DeltaMatroid::minimal_feasible_alt(const SignedPermutation& w) const {
  std::vector<long long> weights(n_);
  for (int k = 1; k <= n_; ++k) {
    const int x = w(k);
    weights[std::abs(x) - 1] = (1LL << (n_ - k)) * (x > 0 ? 1 : -1);
  }
  return argmin_with_weights(weights);
}

std::string DeltaMatroid::to_string() const {
  std::ostringstream out;
  out << "n=" << n_ << " {";
  for (std::size_t i = 0; i < feasible_.size(); ++i) out << (i ? "," : "") << subset_to_string(feasible_[i]);
  out << '}';
  return out.str();
}

}  // namespace deltak
