#include "tensorinv/setpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensorinv {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  int total = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("set partition blocks must be non-empty");
    std::sort(block.begin(), block.end());
    total += static_cast<int>(block.size());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<bool> seen(total + 1, false);
  for (const auto& block : blocks_)
    for (int v : block) {
      if (v < 1 || v > total || seen[v])
        throw std::invalid_argument("set partition blocks must cover 1..d exactly once");
      seen[v] = true;
    }
  ground_size_ = total;
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ',';
    out += '{';
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
    out += '}';
  }
  out += '}';
  return out;
}

std::vector<SetPartition> enumerate_set_partitions(int d, int max_parts) {
  if (d < 0 || max_parts < 0)
    throw std::invalid_argument("enumerate_set_partitions: arguments must be non-negative");
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > d) {
      out.emplace_back(blocks);  // blocks already ordered by minima
      return;
    }
    // Index-based: deeper calls may grow `blocks` and reallocate.
    const size_t existing = blocks.size();
    for (size_t b = 0; b < existing; ++b) {
      blocks[b].push_back(next);
      self(self, next + 1);
      blocks[b].pop_back();
    }
    if (static_cast<int>(blocks.size()) < max_parts) {
      blocks.push_back({next});
      self(self, next + 1);
      blocks.pop_back();
    }
  };
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  rec(rec, 1);
  return out;
}

SetPartition split_compose(const SetPartition& b, const SetPartition& c) {
  const int n = b.ground_size();
  const int k = b.block_count();
  const int l = c.block_count();
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < std::max(k, l); ++i) {
    std::vector<int> block;
    if (i < k) block = b.blocks()[i];
    if (i < l)
      for (int v : c.blocks()[i]) block.push_back(v + n);
    blocks.push_back(std::move(block));
  }
  return SetPartition(std::move(blocks));
}

std::optional<std::pair<SetPartition, SetPartition>> split_witness(const SetPartition& a) {
  const int d = a.ground_size();
  for (int p = 1; p < d; ++p) {
    std::vector<std::vector<int>> left, right;
    for (const auto& block : a.blocks()) {
      std::vector<int> lo, hi;
      for (int v : block)
        (v <= p ? lo : hi).push_back(v - (v <= p ? 0 : p));
      if (!lo.empty()) left.push_back(std::move(lo));
      if (!hi.empty()) right.push_back(std::move(hi));
    }
    SetPartition b(std::move(left)), c(std::move(right));
    if (split_compose(b, c) == a) return std::make_pair(std::move(b), std::move(c));
  }
  return std::nullopt;
}

bool is_splittable(const SetPartition& a) { return split_witness(a).has_value(); }

Integer count_nonsplittable(int d, int max_parts) {
  if (d == 0) return 0;  // the empty word is excluded from first returns
  Integer count(0);
  for (const SetPartition& a : enumerate_set_partitions(d, max_parts))
    if (!is_splittable(a)) ++count;
  return count;
}

}  // namespace tensorinv
