#include "tensorinv/group.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tensorinv {

namespace {

constexpr int kDenseTableLimit = 1024;

int factorial_int(int n) {
  int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Lexicographic rank of a permutation via its Lehmer code.
int lex_rank(const Permutation& p) {
  const int n = p.size();
  int rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank = rank * (n - i + 1) + smaller;
  }
  return rank;
}

Permutation lex_unrank(int rank, int n) {
  std::vector<int> code(n);
  for (int i = n - 1; i >= 0; --i) {
    code[i] = rank % (n - i);
    rank /= (n - i);
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) {
    im[i] = pool[code[i]];
    pool.erase(pool.begin() + code[i]);
  }
  return Permutation(std::move(im));
}

}  // namespace

int FiniteGroup::mult(int i, int j) const {
  if (i < 0 || i >= order_ || j < 0 || j >= order_)
    throw std::out_of_range("group element index out of range");
  if (!table_.empty()) return table_[static_cast<size_t>(i) * order_ + j];
  return mult_uncached(i, j);
}

int FiniteGroup::mult_uncached(int i, int j) const {
  if (family_ == Family::symmetric)
    return lex_rank(compose(perms_[i], perms_[j]));
  const int m = parameter_;
  const int ri = rotation_exponent(i), rj = rotation_exponent(j);
  const bool si = is_reflection(i), sj = is_reflection(j);
  // (r^a s^x)(r^b s^y): s r^b = r^{-b} s.
  const int rot = ((si ? ri - rj : ri + rj) % m + m) % m;
  return dihedral_index(rot, si != sj);
}

int FiniteGroup::inverse(int i) const {
  if (i < 0 || i >= order_) throw std::out_of_range("group element index out of range");
  return inverse_[i];
}

const Permutation& FiniteGroup::permutation(int index) const {
  if (family_ != Family::symmetric)
    throw std::logic_error("permutation(): not a symmetric group");
  return perms_.at(index);
}

int FiniteGroup::index_of(const Permutation& p) const {
  if (family_ != Family::symmetric)
    throw std::logic_error("index_of(): not a symmetric group");
  if (p.size() != parameter_)
    throw std::invalid_argument("index_of(): permutation size mismatch");
  return lex_rank(p);
}

int FiniteGroup::rotation_exponent(int index) const {
  if (family_ != Family::dihedral)
    throw std::logic_error("rotation_exponent(): not a dihedral group");
  return index % parameter_;
}

bool FiniteGroup::is_reflection(int index) const {
  if (family_ != Family::dihedral)
    throw std::logic_error("is_reflection(): not a dihedral group");
  return index >= parameter_;
}

int FiniteGroup::dihedral_index(int rotation, bool reflection) const {
  const int m = parameter_;
  const int rot = ((rotation % m) + m) % m;
  return reflection ? m + rot : rot;
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("symmetric_group: n must be in 1..10");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->family_ = FiniteGroup::Family::symmetric;
  g->parameter_ = n;
  g->order_ = factorial_int(n);
  g->perms_.reserve(g->order_);
  g->labels_.reserve(g->order_);
  g->inverse_.resize(g->order_);
  for (int i = 0; i < g->order_; ++i) {
    g->perms_.push_back(lex_unrank(i, n));
    g->labels_.push_back(cycle_string(g->perms_.back()));
  }
  for (int i = 0; i < g->order_; ++i)
    g->inverse_[i] = lex_rank(inverse(g->perms_[i]));
  if (g->order_ <= kDenseTableLimit) {
    g->table_.resize(static_cast<size_t>(g->order_) * g->order_);
    for (int i = 0; i < g->order_; ++i)
      for (int j = 0; j < g->order_; ++j)
        g->table_[static_cast<size_t>(i) * g->order_ + j] = g->mult_uncached(i, j);
  }
  cache.emplace(n, g);
  return g;
}

GroupPtr dihedral_group(int m) {
  if (m < 2) throw std::invalid_argument("dihedral_group: m must be >= 2");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->family_ = FiniteGroup::Family::dihedral;
  g->parameter_ = m;
  g->order_ = 2 * m;
  g->labels_.reserve(g->order_);
  g->inverse_.resize(g->order_);
  for (int i = 0; i < g->order_; ++i) {
    const int rot = i % m;
    const bool refl = i >= m;
    std::string label;
    if (!refl && rot == 0) label = "e";
    else {
      if (rot == 1) label = "r";
      else if (rot > 1) label = "r^" + std::to_string(rot);
      if (refl) label += "s";
    }
    g->labels_.push_back(label);
    // (r^a)^{-1} = r^{m-a}; reflections are involutions.
    g->inverse_[i] = refl ? i : (rot == 0 ? 0 : m - rot);
  }
  if (g->order_ <= kDenseTableLimit) {
    g->table_.resize(static_cast<size_t>(g->order_) * g->order_);
    for (int i = 0; i < g->order_; ++i)
      for (int j = 0; j < g->order_; ++j)
        g->table_[static_cast<size_t>(i) * g->order_ + j] = g->mult_uncached(i, j);
  }
  cache.emplace(m, g);
  return g;
}

}  // namespace tensorinv
