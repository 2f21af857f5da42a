#pragma once

#include <set>
#include <string>
#include <vector>

#include "tensorinv/cayley.hpp"
#include "tensorinv/group.hpp"
#include "tensorinv/group_algebra.hpp"
#include "tensorinv/rational.hpp"
#include "tensorinv/series.hpp"
#include "tensorinv/tableau.hpp"

namespace tensorinv {

/// Solomon descent basis element D_K: the sum of all permutations whose
/// descent set is exactly K, for K a subset of {1..n-1}.
GroupAlgebraElement descent_basis_element(const GroupPtr& sym, const std::set<int>& K);

/// z_t: the sum of all permutations whose recording tableau is t.
GroupAlgebraElement z_element(const GroupPtr& sym, const StandardTableau& t);

/// Coefficients on the z_t basis, tableaux in the standard_tableaux_all(n)
/// order (shapes descending lex, reading-word order within a shape).
struct ZExpansion {
  int n = 0;
  std::vector<StandardTableau> tableaux;
  std::vector<Rational> coeffs;

  const Rational& coeff(const StandardTableau& t) const;
};

/// Reads off the z_t coordinates of f, verifying that f is constant on each
/// Robinson-Schensted fiber.  Throws NotInSpanError naming a witness fiber
/// otherwise.
ZExpansion expand_in_z_basis(const GroupAlgebraElement& f);

/// Multiplicities of the simple modules V^lambda, partitions listed in
/// descending lexicographic order (trivial module first).
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  explicit MultiplicityVector(std::vector<std::pair<Partition, Integer>> entries);

  const std::vector<std::pair<Partition, Integer>>& entries() const { return entries_; }
  const Integer& at(const Partition& shape) const;

  bool operator==(const MultiplicityVector&) const = default;
  std::string to_string() const;

 private:
  std::vector<std::pair<Partition, Integer>> entries_;
};

/// theta-tilde: sends z_t to the character of shape(t), so the multiplicity
/// of V^lambda is the sum of z-coefficients over tableaux of shape lambda.
/// Throws NonIntegerMultiplicityError if a multiplicity is not a
/// non-negative integer (possible only for invalid custom input).
MultiplicityVector tilde_theta(const ZExpansion& z);

enum class SymModule { geometric, permutation };

/// D_{1} for the geometric module V^(n-1,1), e + D_{1} for the permutation
/// module V^(n) + V^(n-1,1); requires n >= 2.
GroupAlgebraElement module_descent_element(const GroupPtr& sym, SymModule module);

/// The Cayley graph on supp(f) with weights [sigma]f, where f is the
/// module's descent element: generators (12), (132), ..., (1 n ... 4 3 2),
/// plus a loop at e for the permutation module.
CayleyGraph module_graph(const GroupPtr& sym, SymModule module);

/// Decomposition of V^{tensor d} into simple modules.  The walk recursion
/// supplies the coefficient vector of f^d, which is then expanded in the
/// z basis (verifying fiber constancy) and pushed through theta-tilde.
MultiplicityVector decompose_tensor_power(const GroupPtr& sym, SymModule module, int d);

/// Same for a custom element f of the descent algebra.  The caller asserts
/// theta(f) is a genuine character; integrality and non-negativity of the
/// result guard against invalid input (NotInSpanError /
/// NonIntegerMultiplicityError).
MultiplicityVector decompose_tensor_power(const GroupAlgebraElement& f, int d);

/// The lexicographically minimal permutation with recording tableau t.
const Permutation& canonical_representative(const GroupPtr& sym, const StandardTableau& t);

/// Multiplicity of V^lambda read as walk counts to canonical fiber
/// representatives (no z-expansion); used as an independent route.
MultiplicityVector decompose_by_representatives(const GroupPtr& sym, SymModule module, int d);

/// Hilbert-Poincare coefficients dim (V^{tensor d})^{S_n} = walk counts from
/// the identity to itself in the module graph.
TruncatedSeries invariant_dimension_series(const GroupPtr& sym, SymModule module, int degree);

/// Free-generator counts B_e(q) of the module graph.
TruncatedSeries free_generator_counts(const GroupPtr& sym, SymModule module, int degree);

/// Murnaghan-Nakayama character value chi^lambda on the class of cycle type
/// mu, by recursive border-strip removal.
Integer mn_character(const Partition& lambda, const Partition& mu);

struct SymClass {
  Partition cycle_type;
  Integer size;       // n! / z_mu
  int fixed_points;   // number of parts equal to 1
};

/// Conjugacy classes of S_n indexed by cycle type, ascending lex order.
std::vector<SymClass> sym_conjugacy_classes(int n);

/// Character-theoretic cross-check: multiplicity of V^lambda equals
/// (1/n!) sum over classes of |class| (chi^V)^d chi^lambda, all in exact
/// integer arithmetic.  chi^V on a class is the fixed-point count
/// (permutation module) or fixed points - 1 (geometric module).
MultiplicityVector oracle_decompose(int n, SymModule module, int d);

struct ConjectureReport {
  int n = 0;
  TruncatedSeries walk_side{0};    // invariant dimensions from walk counts
  TruncatedSeries closed_side{0};  // 1/(1+q) + q/(1+q) * stirling series for n-1
  std::vector<bool> degree_match;
  bool all_match = false;
};

/// Evidence report for the conjectured closed form of the geometric
/// Hilbert-Poincare series.  Both sides are computed independently and
/// compared per degree; nothing is asserted.
ConjectureReport conjecture_check(int n, int degree);

}  // namespace tensorinv
