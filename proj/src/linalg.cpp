#include "deltak/linalg.hpp"

#include <climits>

#include "deltak/errors.hpp"

namespace deltak {

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;

int to_int(const Integer& z) {
  if (!z.fits_sint_p()) throw ResourceError("lattice coordinate exceeds machine integer range");
  return static_cast<int>(z.get_si());
}

// Row Hermite-style echelon form over Z using unimodular row operations,
// restricted to the first `ncols` columns. Returns the number of pivot rows.
int integer_echelon(ZMatrix& m, std::size_t ncols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    while (true) {
      // Pick the row with the smallest nonzero |entry| in this column.
      std::size_t best = m.size();
      for (std::size_t r = row; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() || abs(m[r][col]) < abs(m[best][col])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[row], m[best]);
      bool done = true;
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][col].get_mpz_t(), m[row][col].get_mpz_t());
        for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= q * m[row][c];
        if (m[r][col] != 0) done = false;
      }
      if (done) {
        if (m[row][col] < 0)
          for (auto& x : m[row]) x = -x;
        ++row;
        break;
      }
    }
  }
  return static_cast<int>(row);
}

}  // namespace

QMatrix to_qmatrix(const std::vector<IntVec>& rows) {
  QMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_qvector(r));
  return m;
}

QVector to_qvector(const IntVec& v) {
  QVector r;
  r.reserve(v.size());
  for (int x : v) r.emplace_back(x);
  return r;
}

std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(row_reduce(m).size()); }

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.size();
  QMatrix aug(n, QVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = row_reduce(aug);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  QMatrix aug(rows, QVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = b[i];
  }
  auto piv = row_reduce(aug);
  QVector x(cols);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(cols)) return std::nullopt;
    x[piv[r]] = aug[r][cols];
  }
  return x;
}

QMatrix nullspace(const QMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  QMatrix r = m;
  auto piv = row_reduce(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : piv) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix transpose(const QMatrix& m) {
  if (m.empty()) return {};
  QMatrix t(m[0].size(), QVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

int gf2_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && (m[piv][col] & 1) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || (m[r][col] & 1) == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) m[r][c] ^= (m[row][c] & 1);
    }
    ++row;
  }
  return static_cast<int>(row);
}

bool gf2_determinant(std::vector<std::vector<int>> m) {
  const int n = static_cast<int>(m.size());
  return gf2_rank(std::move(m)) == n;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& cols) {
  const std::size_t k = cols.size();
  if (k == 0) return {};
  const std::size_t n = cols[0].size();
  // Rows [col_j | e_j]; unimodular row operations clearing the left block
  // leave a kernel basis in the rows whose left part vanishes.
  ZMatrix m(k, std::vector<Integer>(n + k));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[j][i] = cols[j][i];
    m[j][n + j] = 1;
  }
  const int r = integer_echelon(m, n);
  std::vector<IntVec> basis;
  for (std::size_t j = r; j < k; ++j) {
    IntVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = to_int(m[j][n + i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens) {
  if (gens.empty()) return {};
  const std::size_t n = gens[0].size();
  ZMatrix m;
  for (const auto& g : gens) m.emplace_back(g.begin(), g.end());
  const int r = integer_echelon(m, n);
  std::vector<IntVec> basis;
  for (int i = 0; i < r; ++i) {
    IntVec v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = to_int(m[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVec> saturated_basis(const std::vector<IntVec>& gens, int n) {
  std::vector<IntVec> nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  // Orthogonal complement: x with <g, x> = 0 for all g, i.e. the kernel of
  // the n columns of the matrix whose rows are the generators.
  std::vector<IntVec> cols(n, IntVec(nonzero.size()));
  for (std::size_t r = 0; r < nonzero.size(); ++r)
    for (int c = 0; c < n; ++c) cols[c][r] = nonzero[r][c];
  auto complement = integer_kernel(cols);
  if (complement.empty()) {
    std::vector<IntVec> id(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  std::vector<IntVec> cols2(n, IntVec(complement.size()));
  for (std::size_t r = 0; r < complement.size(); ++r)
    for (int c = 0; c < n; ++c) cols2[c][r] = complement[r][c];
  return lattice_basis(integer_kernel(cols2));
}

std::optional<QVector> coordinates(const std::vector<IntVec>& basis, const IntVec& x) {
  if (basis.empty()) {
    if (is_zero(x)) return QVector{};
    return std::nullopt;
  }
  const std::size_t n = x.size();
  const std::size_t d = basis.size();
  QMatrix m(n, QVector(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = basis[j][i];
  auto sol = solve(m, to_qvector(x));
  return sol;
}

}  // namespace deltak
