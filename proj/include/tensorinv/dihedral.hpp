#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tensorinv/cayley.hpp"
#include "tensorinv/group.hpp"
#include "tensorinv/group_algebra.hpp"
#include "tensorinv/rational.hpp"
#include "tensorinv/series.hpp"

namespace tensorinv {

/// Label of a simple D_m-module: id, eps, gamma / gamma*eps (even m only),
/// or chi_j with 1 <= j <= k-1 for m = 2k and 1 <= j <= k for m = 2k+1.
struct DihedralCharLabel {
  enum class Kind { id, eps, gamma, gamma_eps, chi };
  Kind kind = Kind::id;
  int index = 0;  // j for chi_j, 0 otherwise

  static DihedralCharLabel chi(int j) { return {Kind::chi, j}; }

  std::string to_string() const;
  bool operator==(const DihedralCharLabel&) const = default;
  auto operator<=>(const DihedralCharLabel&) const = default;
};

/// Simple-module labels of D_m in canonical order: id, eps, (gamma,
/// gamma*eps for even m), chi_1, chi_2, ...
std::vector<DihedralCharLabel> dihedral_labels(int m);

/// Basis element of the subalgebra Q of the group algebra R D_m.  Supports
/// of distinct basis elements are disjoint, cover D_m, and carry unit
/// coefficients.  The two elements mapping to chi_i are y_i = r^{1-i}s + r^i
/// (primary) and y_i * rs (secondary).
struct QBasisElement {
  DihedralCharLabel label;
  bool secondary = false;
  GroupAlgebraElement element;
};

/// The Q basis for m >= 3: {e, r^k, rs, r^{k+1}s, y_i, y_i rs} for m = 2k,
/// {e, rs, y_i, y_i rs} for m = 2k+1.
std::vector<QBasisElement> q_basis(const GroupPtr& dihedral);

/// Structure constants of Q: row (i, j) holds the coordinates of b_i b_j on
/// the basis.
struct QProductTable {
  int m = 0;
  std::vector<std::vector<std::vector<Rational>>> coords;  // [i][j][k]
};

/// Recomputes the multiplication table of Q, throwing NotInSpanError if any
/// pairwise product leaves the span, and checks the homomorphism property
/// theta(b_i b_j) = theta(b_i) theta(b_j) against character arithmetic
/// (double precision, 1e-6 gate).
QProductTable verify_subalgebra(const GroupPtr& dihedral);

using DihedralMultiplicities = std::vector<std::pair<DihedralCharLabel, Integer>>;

std::string to_string(const DihedralMultiplicities& mults);
const Integer& multiplicity_of(const DihedralMultiplicities& mults, const DihedralCharLabel& label);

/// Decomposes V^{tensor d} where the character of V is
/// sum coeffs[i] * theta(b_i), coeffs a non-negative integer vector aligned
/// with q_basis order.  Multiplicities are walk counts to one support
/// representative per basis element.
DihedralMultiplicities decompose_tensor_power_dihedral(const GroupPtr& dihedral,
                                                       const std::vector<Integer>& coeffs, int d);

/// q_basis coordinates of the geometric module V^1 (the element y_1 = s + r).
std::vector<Integer> geometric_module_coeffs(const GroupPtr& dihedral);

/// Walk counts from the identity to itself in Gamma(D_m, {r, s}):
/// dim ((V^1)^{tensor d})^{D_m}.
TruncatedSeries geometric_invariant_series(const GroupPtr& dihedral, int degree);

/// B_e(q) of Gamma(D_m, {r, s}): free-generator counts of T(V^1)^{D_m}.
TruncatedSeries dihedral_free_generator_series(const GroupPtr& dihedral, int degree);

/// Closed Hilbert-Poincare formula for T(V^1)^{D_m} assembled from exact
/// integer polynomials in q and expanded by long division; m >= 3.
TruncatedSeries hilbert_poincare_closed(int m, int degree);
RationalFunction hilbert_poincare_closed_form(int m);

/// Character value reconstructed from the module matrices (s acting as the
/// antidiagonal swap and r as diag(xi^j, xi^-j) for chi_j; sign patterns on
/// (r, s) for the linear characters).  Used only by the oracle.
double character_value(int m, const DihedralCharLabel& label, int element_index);

/// Inner-product cross-check in double precision with a 1e-6 integrality
/// gate (throws RoundingGapError on failure).  When `residuals` is non-null
/// it receives |value - round| per label, for reporting alongside the
/// rounded integers.
DihedralMultiplicities dihedral_oracle_decompose(const GroupPtr& dihedral,
                                                 const std::vector<Integer>& coeffs, int d,
                                                 std::vector<double>* residuals = nullptr);

}  // namespace tensorinv
