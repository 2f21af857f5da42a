#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tensorinv/perm.hpp"

namespace tensorinv {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group with canonically ordered elements and indexed products.
/// Instances are immutable and shared by identity: the factory functions
/// below memoize, so two requests for the same group return the same object
/// and algebra elements can validate group identity by pointer comparison.
///
/// Products for small groups come from a dense table; larger symmetric
/// groups compose element metadata on the fly (a dense n! x n! table is not
/// materialized).
class FiniteGroup {
 public:
  enum class Family { symmetric, dihedral };

  int order() const { return order_; }
  int identity() const { return 0; }
  Family family() const { return family_; }
  int parameter() const { return parameter_; }  // n for S_n, m for D_m

  int mult(int i, int j) const;
  int inverse(int i) const;
  const std::string& label(int i) const { return labels_[i]; }

  // Symmetric-group element metadata.
  const Permutation& permutation(int index) const;
  int index_of(const Permutation& p) const;  // lexicographic rank

  // Dihedral element metadata: index i < m is r^i, index m+i is r^i s.
  int rotation_exponent(int index) const;
  bool is_reflection(int index) const;
  int dihedral_index(int rotation, bool reflection) const;

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

 private:
  FiniteGroup() = default;

  int mult_uncached(int i, int j) const;

  Family family_{};
  int parameter_ = 0;
  int order_ = 0;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;   // symmetric only
  std::vector<int> inverse_;
  std::vector<int> table_;           // dense order x order table, small groups only

  friend GroupPtr symmetric_group(int n);
  friend GroupPtr dihedral_group(int m);
};

/// S_n with elements in lexicographic one-line order (index 0 = identity).
/// Supported range 1 <= n <= 10.
GroupPtr symmetric_group(int n);

/// D_m = <s, r | s^2 = r^m = srsr = e> of order 2m, m >= 2, with elements
/// ordered e, r, ..., r^{m-1}, s, rs, ..., r^{m-1}s.
GroupPtr dihedral_group(int m);

}  // namespace tensorinv
