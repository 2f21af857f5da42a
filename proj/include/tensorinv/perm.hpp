#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tensorinv {

/// A bijection on {1..n} in one-line notation: images()[i-1] = sigma(i).
/// Fixed points are materialized; n is carried explicitly.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;  // lex on one-line form

 private:
  std::vector<int> images_;
};

/// Product with (p*q)(i) = p(q(i)).  Under this convention a word
/// s1 s2 ... sd along Cayley-graph edges reduces to s1*s2*...*sd.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// {i in 1..n-1 : sigma(i) > sigma(i+1)}.
std::set<int> descent_set(const Permutation& p);

/// Parses cycle notation such as "(1 4 3 2)" or "(132)(45)".  Entries may be
/// separated by whitespace or commas; a run of bare digits is read one digit
/// at a time, so entries >= 10 need separators.  "e", "()" and the empty
/// string denote the identity.  Cycles must be disjoint with entries in 1..n.
Permutation parse_cycles(std::string_view text, int n);

/// Renders disjoint-cycle notation with fixed points omitted; identity is "e".
std::string cycle_string(const Permutation& p);

}  // namespace tensorinv
