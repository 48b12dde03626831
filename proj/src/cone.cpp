#include "deltak/cone.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "deltak/errors.hpp"
#include "deltak/lp.hpp"

namespace deltak {

namespace {

IntVec primitive_abs(const IntVec& v) { return primitive(v); }

IntVec to_int_coords(const QVector& q) {
  IntVec r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!is_integer(q[i])) throw ConsistencyError("point is not in the lattice");
    r[i] = static_cast<int>(q[i].get_num().get_si());
  }
  return r;
}

QVector mat_apply(const QMatrix& m, const IntVec& x) {
  QVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0) acc += m[i][j] * x[j];
    r[i] = acc;
  }
  return r;
}

QMatrix ray_inverse(const std::vector<IntVec>& rays, const std::vector<int>& simplex) {
  const std::size_t d = simplex.size();
  QMatrix m(d, QVector(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) m[i][j] = rays[simplex[j]][i];
  auto inv = inverse(m);
  if (!inv) throw ConsistencyError("degenerate simplex in triangulation");
  return *inv;
}

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

}  // namespace

RationalCone::RationalCone(int dim, std::vector<IntVec> generators) : dim_(dim) {
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw InvalidInputError("cone generator has wrong dimension");
    if (!is_zero(g)) gens_.push_back(std::move(g));
  }
}

bool RationalCone::is_pointed() const { return deltak::is_pointed(gens_); }

IntVec Triangulation::to_ambient(const IntVec& coords) const {
  const std::size_t n = basis.empty() ? 0 : basis[0].size();
  IntVec x(n, 0);
  for (std::size_t j = 0; j < coords.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) x[i] += coords[j] * basis[j][i];
  return x;
}

bool Triangulation::contains(const IntVec& coords) const {
  if (is_zero(coords)) return true;
  for (const auto& inv : inverses) {
    auto lambda = mat_apply(inv, coords);
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q >= 0; })) return true;
  }
  return false;
}

Triangulation triangulate(const RationalCone& cone, LatticeKind lattice) {
  if (!cone.is_pointed()) throw InvalidInputError("cone is not pointed");
  Triangulation t;
  const auto& gens = cone.generators();
  if (gens.empty()) return t;
  t.basis = lattice == LatticeKind::Standard ? saturated_basis(gens, cone.dim()) : lattice_basis(gens);
  const std::size_t d = t.basis.size();

  // Lattice coordinates, one primitive vector per direction.
  std::set<IntVec> directions;
  for (const auto& g : gens) {
    auto q = coordinates(t.basis, g);
    if (!q) throw ConsistencyError("generator outside its own lattice span");
    directions.insert(primitive_abs(to_int_coords(*q)));
  }
  std::vector<IntVec> cand(directions.begin(), directions.end());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    std::vector<IntVec> others;
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i) others.push_back(cand[j]);
    if (!in_cone(others, cand[i])) t.rays.push_back(cand[i]);
  }

  // Initial simplex: first rays that raise the rank.
  std::vector<int> order;
  std::vector<int> initial;
  {
    QMatrix acc;
    for (std::size_t i = 0; i < t.rays.size(); ++i) {
      QMatrix trial = acc;
      trial.push_back(to_qvector(t.rays[i]));
      if (initial.size() < d && rank(trial) > static_cast<int>(acc.size())) {
        acc = std::move(trial);
        initial.push_back(static_cast<int>(i));
      } else {
        order.push_back(static_cast<int>(i));
      }
    }
  }
  if (initial.size() != d) throw ConsistencyError("extreme rays do not span the cone");

  // facet (sorted ray indices) -> list of (simplex, opposite position)
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  auto add_simplex = [&](std::vector<int> simplex) {
    std::sort(simplex.begin(), simplex.end());
    const std::size_t id = t.simplices.size();
    t.inverses.push_back(ray_inverse(t.rays, simplex));
    for (std::size_t pos = 0; pos < simplex.size(); ++pos) {
      std::vector<int> f;
      for (std::size_t q = 0; q < simplex.size(); ++q)
        if (q != pos) f.push_back(simplex[q]);
      facets[f].emplace_back(id, pos);
    }
    t.simplices.push_back(std::move(simplex));
  };
  add_simplex(initial);
  for (int r : order) {
    std::vector<std::vector<int>> fresh;
    for (const auto& [f, owners] : facets) {
      if (owners.size() != 1) continue;
      const auto [sid, pos] = owners[0];
      const auto lambda = mat_apply(t.inverses[sid], t.rays[r]);
      if (lambda[pos] < 0) {
        std::vector<int> s = f;
        s.push_back(r);
        fresh.push_back(std::move(s));
      }
    }
    if (fresh.empty()) throw ConsistencyError("extreme ray placed inside the current cone");
    for (auto& s : fresh) add_simplex(std::move(s));
  }
  return t;
}

std::vector<IntVec> parallelepiped_points(const Triangulation& t, std::size_t simplex,
                                          const std::vector<bool>& excluded) {
  const auto& idx = t.simplices[simplex];
  const QMatrix& inv = t.inverses[simplex];
  const std::size_t d = idx.size();
  auto reduce = [&](const IntVec& x) {
    auto lambda = mat_apply(inv, x);
    IntVec y = x;
    for (std::size_t i = 0; i < d; ++i) {
      Rational shift = floor_q(lambda[i]);
      if (excluded[i] && lambda[i] == shift) shift -= 1;
      if (shift == 0) continue;
      const long k = shift.get_num().get_si();
      for (std::size_t c = 0; c < d; ++c) y[c] -= static_cast<int>(k * t.rays[idx[i]][c]);
    }
    return y;
  };
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  IntVec start = reduce(IntVec(d, 0));
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < d; ++j) {
      IntVec y = x;
      y[j] += 1;
      y = reduce(y);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

HilbertSeriesRep cone_hilbert(const RationalCone& cone) {
  HilbertSeriesRep rep;
  rep.dim = cone.dim();
  const Triangulation t = triangulate(cone, LatticeKind::Standard);
  if (t.simplices.empty()) {
    rep.pieces.push_back({LaurentPoly::constant(cone.dim(), 1), {}});
    return rep;
  }
  const std::size_t d = t.basis.size();
  // Generic interior vector: weighted sum of all rays, perturbed until it
  // avoids every facet hyperplane.
  IntVec xi;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 64) throw ConsistencyError("no generic interior vector found");
    xi.assign(d, 0);
    for (std::size_t r = 0; r < t.rays.size(); ++r) {
      const int w = 1009 + static_cast<int>((r + 1) * (r + 2) * (attempt + 1) * 7);
      for (std::size_t c = 0; c < d; ++c) xi[c] += w * t.rays[r][c];
    }
    bool generic = true;
    for (const auto& inv : t.inverses) {
      for (const auto& l : mat_apply(inv, xi))
        if (l == 0) generic = false;
    }
    if (generic) break;
  }
  for (std::size_t s = 0; s < t.simplices.size(); ++s) {
    const auto lambda = mat_apply(t.inverses[s], xi);
    std::vector<bool> excluded(d);
    for (std::size_t i = 0; i < d; ++i) excluded[i] = lambda[i] < 0;
    HilbertPiece piece{LaurentPoly(cone.dim()), {}};
    for (const auto& p : parallelepiped_points(t, s, excluded)) piece.numerator.add_term(-t.to_ambient(p), 1);
    for (int r : t.simplices[s]) piece.denominators.push_back(t.to_ambient(t.rays[r]));
    rep.pieces.push_back(std::move(piece));
  }
  return rep;
}

std::vector<IntVec> hilbert_basis(const RationalCone& cone, LatticeKind lattice) {
  const Triangulation t = triangulate(cone, lattice);
  if (t.simplices.empty()) return {};
  const std::size_t d = t.basis.size();
  std::set<IntVec> cand(t.rays.begin(), t.rays.end());
  for (std::size_t s = 0; s < t.simplices.size(); ++s)
    for (auto& p : parallelepiped_points(t, s, std::vector<bool>(d, false)))
      if (!is_zero(p)) cand.insert(p);
  std::vector<IntVec> list(cand.begin(), cand.end());
  std::vector<IntVec> basis;
  for (const auto& h : list) {
    bool reducible = false;
    for (const auto& c : list) {
      if (c == h) continue;
      if (t.contains(h - c)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(t.to_ambient(h));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

RationalCone tangent_cone(const DeltaMatroid& d, Subset s) {
  if (!d.is_feasible(s)) throw InvalidInputError("tangent cone requested at a non-feasible set");
  std::vector<IntVec> gens;
  const IntVec base = indicator(d.n(), s);
  for (Subset f : d.feasible())
    if (f != s) gens.push_back(indicator(d.n(), f) - base);
  return RationalCone(d.n(), std::move(gens));
}

LaurentPoly truncate_series(const HilbertSeriesRep& h, const IntVec& grading, int level) {
  LaurentPoly total(h.dim);
  auto deg = [&](const IntVec& e) { return -dot(grading, e); };  // exponent e = -m
  for (const auto& piece : h.pieces) {
    LaurentPoly acc(h.dim);
    for (const auto& [e, c] : piece.numerator.terms())
      if (deg(e) <= level) acc.add_term(e, c);
    for (const auto& dvec : piece.denominators) {
      const long long step = dot(grading, dvec);
      if (step <= 0) throw InvalidInputError("truncate_series: grading is not positive on a denominator");
      LaurentPoly next(h.dim);
      for (const auto& [e, c] : acc.terms()) {
        IntVec cur = e;
        for (long long g = deg(e); g <= level; g += step) {
          next.add_term(cur, c);
          cur = cur - dvec;
        }
      }
      acc = std::move(next);
    }
    total += acc;
  }
  return total;
}

}  // namespace deltak
