#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltak/delta_matroid.hpp"
#include "deltak/laurent.hpp"
#include "deltak/signed_permutation.hpp"

namespace deltak {

/// Maximal cone σ_w of the type B permutohedral fan and its dual basis.
struct FixedPointData {
  SignedPermutation w;
  /// u_k = e_w(1) + ... + e_w(k)
  std::vector<IntVec> generators;
  /// m_j with <m_j, u_k> = δ_jk; these are the tangent weights at pt_w.
  std::vector<IntVec> dual;
};

/// Generators and dual basis by exact matrix inversion; throws
/// ConsistencyError if the generator matrix is not unimodular.
FixedPointData cone_data(const SignedPermutation& w);

/// Dual basis in closed form: m_k = e_w(k) - e_w(k+1) (k < n), m_n = e_w(n).
std::vector<IntVec> dual_basis(const SignedPermutation& w);

struct MomentEdge {
  SignedPermutation from;
  SignedPermutation to;
  /// 1..n; i < n swaps positions i, i+1, i = n bars position n.
  int simple_index;
  IntVec label;
};

/// The n edges at w.
std::vector<MomentEdge> moment_edges(const SignedPermutation& w);

/// Chart characters T_B of OGr(n; 2n+1) at the fixed point with B ∩ [n] = s.
std::vector<IntVec> ogr_chart_characters(int n, Subset s);

struct OgrEdge {
  Subset from;
  Subset to;
  IntVec label;  // v in T_B with e_B' = e_B + 2v
};
std::vector<OgrEdge> ogr_edges(int n, Subset s);

struct GkmResult {
  bool ok = true;
  std::string violation;
};

/// Checks f_w - f_{wτ} ≡ 0 mod (1 - T^label) on every moment-graph edge.
GkmResult gkm_check_x(int n, const std::function<LaurentPoly(const SignedPermutation&)>& cls);
GkmResult gkm_check_ogr(int n, const std::function<LaurentPoly(Subset)>& cls);

}  // namespace deltak
