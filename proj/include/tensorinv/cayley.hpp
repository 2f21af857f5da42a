#pragma once

#include <vector>

#include "tensorinv/group.hpp"
#include "tensorinv/group_algebra.hpp"
#include "tensorinv/rational.hpp"
#include "tensorinv/series.hpp"

namespace tensorinv {

struct WeightedGenerator {
  int element = 0;
  Rational weight = 1;
};

/// Weighted Cayley graph: vertices are group elements, a directed edge
/// g -> g*s of weight w for each generator (s, w).  Duplicate generator
/// elements are merged by adding weights at construction; zero weights are
/// rejected.
///
/// Coefficient extraction stays valid for negative or non-integer weights
/// (the walk recursion is plain group-algebra arithmetic), but the
/// words-counting interpretation only applies to non-negative weights.
class CayleyGraph {
 public:
  CayleyGraph(GroupPtr group, std::vector<WeightedGenerator> generators);

  const GroupPtr& group() const { return group_; }
  const std::vector<WeightedGenerator>& generators() const { return generators_; }

  /// The element sum w_1 s_1 + ... + w_r s_r of the group algebra.
  GroupAlgebraElement generator_sum() const;

 private:
  GroupPtr group_;
  std::vector<WeightedGenerator> generators_;
};

/// Weighted counts of length-d words from the identity, one entry per group
/// element; equals the coefficient vector of (sum w_i s_i)^d.
struct WalkTable {
  int degree = 0;
  std::vector<Rational> counts;
};

WalkTable walk_counts(const CayleyGraph& graph, int d);

/// Weighted counts of length-d words with no proper non-empty prefix
/// reducing to the identity.  d = 0 is rejected: the empty word is excluded
/// so that A = 1/(1-B_e) holds with A(0) = 1.  A loop generator at the
/// identity yields a length-1 first return, with no special case needed.
WalkTable first_return_counts(const CayleyGraph& graph, int d);

/// A_sigma(q): weighted number of length-d words reducing to target, per
/// degree up to the truncation bound.
TruncatedSeries return_series(const CayleyGraph& graph, int target, int degree);

/// B_sigma(q): same, restricted to words that do not cross the identity.
TruncatedSeries first_return_series(const CayleyGraph& graph, int target, int degree);

}  // namespace tensorinv
