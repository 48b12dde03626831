#include "deltak/realization.hpp"

#include <set>

#include "deltak/errors.hpp"
#include "deltak/linalg.hpp"

namespace deltak {

namespace {

Rational reduce(const Rational& x, Field f) {
  if (f == Field::Rationals) return x;
  if (x.get_den() % 2 == 0) throw InvalidInputError("entry is not defined over GF(2)");
  Integer num = x.get_num() % 2;
  return Rational(num == 0 ? 0 : 1);
}

Rational quadric(const GroundMatrix& m, const std::vector<Rational>& x) {
  Rational q = x[m.column(0)] * x[m.column(0)];
  for (int i = 1; i <= m.n; ++i) q += x[m.column(i)] * x[m.column(-i)];
  return q;
}

Rational polar(const GroundMatrix& m, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational b = 2 * x[m.column(0)] * y[m.column(0)];
  for (int i = 1; i <= m.n; ++i)
    b += x[m.column(i)] * y[m.column(-i)] + x[m.column(-i)] * y[m.column(i)];
  return b;
}

void check_shape(const GroundMatrix& m) {
  if (m.n < 1 || m.n > kMaxGroundSize) throw InvalidInputError("matrix: bad ground size");
  if (static_cast<int>(m.rows.size()) != m.n) throw InvalidInputError("matrix must have n rows");
  for (const auto& r : m.rows)
    if (static_cast<int>(r.size()) != 2 * m.n + 1) throw InvalidInputError("matrix rows must have 2n+1 entries");
}

}  // namespace

std::optional<std::vector<Rational>> isotropy_witness(const GroundMatrix& m) {
  check_shape(m);
  const int n = m.n;
  const int width = 2 * n + 1;
  if (m.field == Field::GF2) {
    // q is not bilinear in characteristic 2, so test every vector in the row space.
    for (std::uint32_t combo = 1; combo < (std::uint32_t{1} << n); ++combo) {
      std::vector<Rational> x(width, Rational(0));
      for (int r = 0; r < n; ++r) {
        if (!((combo >> r) & 1)) continue;
        for (int c = 0; c < width; ++c) x[c] = reduce(x[c] + reduce(m.rows[r][c], m.field), m.field);
      }
      if (reduce(quadric(m, x), m.field) != 0) return x;
    }
    return std::nullopt;
  }
  for (int r = 0; r < n; ++r) {
    if (quadric(m, m.rows[r]) != 0) return m.rows[r];
    for (int s = r + 1; s < n; ++s) {
      if (polar(m, m.rows[r], m.rows[s]) != 0) {
        std::vector<Rational> x(width);
        for (int c = 0; c < width; ++c) x[c] = m.rows[r][c] + m.rows[s][c];
        return x;
      }
    }
  }
  return std::nullopt;
}

DeltaMatroid from_matrix(const GroundMatrix& m) {
  check_shape(m);
  const int n = m.n;
  if (auto w = isotropy_witness(m)) {
    std::string s = "row space is not isotropic; witness (";
    for (std::size_t i = 0; i < w->size(); ++i) s += (i ? "," : "") + (*w)[i].get_str();
    throw InvalidInputError(s + ")");
  }
  std::vector<std::vector<int>> gf2(n, std::vector<int>(2 * n + 1));
  QMatrix q(n, QVector(2 * n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < 2 * n + 1; ++c) {
      if (m.field == Field::GF2)
        gf2[r][c] = reduce(m.rows[r][c], m.field) == 0 ? 0 : 1;
      else
        q[r][c] = m.rows[r][c];
    }
  }
  const bool full_rank = m.field == Field::GF2 ? gf2_rank(gf2) == n : rank(q) == n;
  if (!full_rank) throw InvalidInputError("matrix rows have rank below n");

  std::vector<Subset> feasible;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    std::vector<int> cols;
    for (int i = 1; i <= n; ++i) cols.push_back(m.column(((s >> (i - 1)) & 1) ? i : -i));
    bool nonzero;
    if (m.field == Field::GF2) {
      std::vector<std::vector<int>> minor(n, std::vector<int>(n));
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) minor[r][j] = gf2[r][cols[j]];
      nonzero = gf2_determinant(std::move(minor));
    } else {
      QMatrix minor(n, QVector(n));
      for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) minor[r][j] = q[r][cols[j]];
      nonzero = determinant(std::move(minor)) != 0;
    }
    if (nonzero) feasible.push_back(s);
  }
  // Plücker relations make the family a delta-matroid; skip the polytope check.
  return DeltaMatroid::unchecked(n, std::move(feasible));
}

std::pair<DeltaMatroid, GroundMatrix> from_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxGroundSize) throw InvalidInputError("graph: bad vertex count");
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw InvalidInputError("graph: edge endpoint out of range");
    if (a == b) throw InvalidInputError("graph: loops are not allowed");
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) throw InvalidInputError("graph: repeated edge");
    adj[a - 1][b - 1] = adj[b - 1][a - 1] = 1;
  }
  std::vector<Subset> feasible;
  for (Subset s = 0; s < (Subset{1} << n); ++s) {
    const auto idx = subset_elements(s);
    std::vector<std::vector<int>> minor(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) minor[r][c] = adj[idx[r] - 1][idx[c] - 1];
    if (gf2_determinant(std::move(minor))) feasible.push_back(s);
  }
  GroundMatrix m;
  m.field = Field::GF2;
  m.n = n;
  m.rows.assign(n, std::vector<Rational>(2 * n + 1, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int i = 1; i <= n; ++i) m.rows[r][m.column(i)] = adj[r][i - 1];
    m.rows[r][m.column(-(r + 1))] = 1;
  }
  return {DeltaMatroid::unchecked(n, std::move(feasible)), std::move(m)};
}

}  // namespace deltak
