#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "tensorinv/perm.hpp"

namespace tensorinv {

/// Weakly decreasing sequence of positive integers.  The empty partition of 0
/// is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const;  // sum of parts
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  std::string to_string() const;  // "(2,1)"

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;  // lex on parts

 private:
  std::vector<int> parts_;
};

/// All partitions of n in ascending lexicographic order:
/// partitions(3) = (1,1,1), (2,1), (3).
std::vector<Partition> partitions(int n);

/// Standard tableau in French orientation: rows()[0] is the bottom (longest)
/// row, entries increase left-to-right in rows and bottom-to-top in columns,
/// and the entries are exactly 1..n.
class StandardTableau {
 public:
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;
  Partition shape() const;
  int row_of(int entry) const;  // 0 = bottom row

  /// Rows concatenated bottom-to-top; used for the deterministic ordering.
  std::vector<int> reading_word() const;
  std::string to_string() const;  // "[1,2|3]", rows bottom to top

  bool operator==(const StandardTableau&) const = default;
  auto operator<=>(const StandardTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// {i : i+1 lies in a strictly higher row than i}.
std::set<int> tableau_descent_set(const StandardTableau& t);

/// All standard tableaux of the given shape, ordered lexicographically by
/// reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// All standard tableaux with n cells: shapes in descending lexicographic
/// order, reading-word order within a shape.  For n = 3 this begins with the
/// single row and ends with the single column.
std::vector<StandardTableau> standard_tableaux_all(int n);

struct RSPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Row insertion of sigma(1), ..., sigma(n).
RSPair robinson_schensted(const Permutation& p);

}  // namespace tensorinv
