#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensorinv/rational.hpp"

namespace tensorinv {

/// Set partition of [d]: disjoint non-empty blocks covering {1..d}, each
/// block sorted, blocks ordered by their minima.  (The source material
/// spells the associated notion "splitable"; the API uses "splittable".)
class SetPartition {
 public:
  SetPartition() = default;  // the empty partition of [0]
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  int ground_size() const { return ground_size_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  std::string to_string() const;  // "{{1,3},{2}}"

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int ground_size_ = 0;
};

/// All set partitions of [d] with at most max_parts blocks, in the order
/// produced by assigning 1..d to the first feasible blocks (deterministic).
/// d = 0 yields a single empty partition.
std::vector<SetPartition> enumerate_set_partitions(int d, int max_parts);

/// The shift-and-merge composition: blocks of c are shifted by |b| and
/// merged index-wise with the blocks of b; the longer list's tail is kept.
SetPartition split_compose(const SetPartition& b, const SetPartition& c);

/// If a = b o c for non-empty b and c, the witness with the leftmost split
/// point; otherwise nullopt.
std::optional<std::pair<SetPartition, SetPartition>> split_witness(const SetPartition& a);

bool is_splittable(const SetPartition& a);

/// Number of nonsplittable set partitions of [d] with at most max_parts
/// blocks; equals the first-return count in the permutation-module Cayley
/// graph of S_{max_parts}.  d = 0 returns 0, matching B_e(0) = 0.
Integer count_nonsplittable(int d, int max_parts);

}  // namespace tensorinv
