#include "deltak/lp.hpp"

#include <numeric>

#include "deltak/errors.hpp"

namespace deltak {

namespace {

// Dense tableau: rows 0..m-1 are constraints, last column the rhs.
struct Tableau {
  QMatrix t;
  std::vector<int> basis;
  std::size_t nvars = 0;

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t[row][col];
    for (auto& x : t[row]) x *= inv;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == row || t[r][col] == 0) continue;
      const Rational f = t[r][col];
      for (std::size_t c = 0; c < t[r].size(); ++c)
        if (t[row][c] != 0) t[r][c] -= f * t[row][c];
    }
    basis[row] = static_cast<int>(col);
  }

  // Minimizes the objective stored as reduced costs in `obj` (length
  // nvars + 1, last entry = -value). Only columns with allowed[col] enter.
  LpStatus run(QVector& obj, const std::vector<bool>& allowed) {
    const std::size_t rhs = nvars;
    while (true) {
      std::size_t enter = nvars;
      for (std::size_t c = 0; c < nvars; ++c) {
        if (allowed[c] && obj[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter == nvars) return LpStatus::Optimal;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][rhs] / t[r][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == t.size()) return LpStatus::Unbounded;
      pivot(leave, enter);
      const Rational f = obj[enter];
      for (std::size_t c = 0; c <= nvars; ++c) obj[c] -= f * t[leave][c];
    }
  }
};

}  // namespace

LpResult solve_standard_lp(const QMatrix& A, const QVector& b, const QVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  LpResult result;
  // Columns: n original, m artificial, rhs.
  Tableau tab;
  tab.nvars = n + m;
  tab.t.assign(m, QVector(n + m + 1));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = flip ? -A[i][j] : A[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][n + m] = flip ? -b[i] : b[i];
    tab.basis[i] = static_cast<int>(n + i);
  }
  // Phase 1: minimize the sum of artificials.
  QVector obj(n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= tab.t[i][j];
    obj[n + m] -= tab.t[i][n + m];
  }
  std::vector<bool> allowed(n + m, true);
  tab.run(obj, allowed);
  if (obj[n + m] != 0) return result;  // positive infeasibility

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < static_cast<int>(n)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.t[r][j] != 0) {
        tab.pivot(r, j);
        break;
      }
    }
  }
  // Phase 2.
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;
  QVector obj2(n + m + 1);
  for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
  for (std::size_t r = 0; r < m; ++r) {
    const int bcol = tab.basis[r];
    if (bcol >= static_cast<int>(n) || obj2[bcol] == 0) continue;
    const Rational f = obj2[bcol];
    for (std::size_t col = 0; col <= n + m; ++col) obj2[col] -= f * tab.t[r][col];
  }
  // Artificial rows that stayed basic are redundant (zero rhs); their
  // columns are barred from entering, so they never leave either.
  if (tab.run(obj2, allowed) == LpStatus::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x.assign(n, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] < static_cast<int>(n)) result.x[tab.basis[r]] = tab.t[r][n + m];
  result.value = -obj2[n + m];
  return result;
}

bool in_cone(const std::vector<IntVec>& gens, const IntVec& x) {
  if (is_zero(x)) return true;
  if (gens.empty()) return false;
  const std::size_t dim = x.size();
  QMatrix A(dim, QVector(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) A[i][j] = gens[j][i];
  auto r = solve_standard_lp(A, to_qvector(x), QVector(gens.size()));
  return r.status == LpStatus::Optimal;
}

bool is_pointed(const std::vector<IntVec>& gens) {
  if (gens.empty()) return true;
  const std::size_t dim = gens[0].size();
  // Pointed iff sum l_j g_j = 0, sum l_j = 1, l >= 0 is infeasible
  // (zero generators count as lines of length zero and are ignored).
  std::vector<IntVec> nz;
  for (const auto& g : gens)
    if (!is_zero(g)) nz.push_back(g);
  if (nz.empty()) return true;
  QMatrix A(dim + 1, QVector(nz.size()));
  for (std::size_t j = 0; j < nz.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) A[i][j] = nz[j][i];
    A[dim][j] = 1;
  }
  QVector b(dim + 1);
  b[dim] = 1;
  return solve_standard_lp(A, b, QVector(nz.size())).status == LpStatus::Infeasible;
}

IntVec positive_grading(const std::vector<IntVec>& gens, int dim) {
  if (gens.empty()) return IntVec(dim, 1);
  // Variables l = p - q (p, q >= 0) and slacks; constraints <l, g> - s = 1.
  const std::size_t k = gens.size();
  const std::size_t nv = 2 * dim + k;
  QMatrix A(k, QVector(nv));
  for (std::size_t r = 0; r < k; ++r) {
    for (int i = 0; i < dim; ++i) {
      A[r][i] = gens[r][i];
      A[r][dim + i] = -gens[r][i];
    }
    A[r][2 * dim + r] = -1;
  }
  QVector b(k, Rational(1));
  // Prefer small functionals: minimize the l1 norm.
  QVector c(nv);
  for (int i = 0; i < 2 * dim; ++i) c[i] = 1;
  auto res = solve_standard_lp(A, b, c);
  if (res.status != LpStatus::Optimal) return {};
  Integer lcm = 1;
  for (int i = 0; i < 2 * dim; ++i) {
    Integer d = res.x[i].get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  IntVec l(dim);
  for (int i = 0; i < dim; ++i) {
    Rational v = (res.x[i] - res.x[dim + i]) * lcm;
    if (!v.get_num().fits_sint_p()) throw ResourceError("grading functional too large");
    l[i] = static_cast<int>(v.get_num().get_si());
  }
  return l;
}

}  // namespace deltak
