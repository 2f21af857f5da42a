#pragma once

#include <string>
#include <vector>

#include "tensorinv/group.hpp"
#include "tensorinv/rational.hpp"

namespace tensorinv {

/// Element of the rational group algebra: a dense exact-rational coefficient
/// vector indexed by the group's element order.  Binary operations validate
/// that both operands reference the same group object.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group);
  static GroupAlgebraElement unit(GroupPtr group);  // delta_e
  static GroupAlgebraElement delta(GroupPtr group, int index);

  const GroupPtr& group() const { return group_; }
  const Rational& operator[](int index) const { return coeffs_.at(index); }
  Rational& operator[](int index) { return coeffs_.at(index); }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  bool operator==(const GroupAlgebraElement& other) const;

  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
GroupAlgebraElement operator*(const Rational& scalar, GroupAlgebraElement a);

/// Convolution product: (fg)_h = sum over h = h1 h2 of f_{h1} g_{h2}.
GroupAlgebraElement operator*(const GroupAlgebraElement& f, const GroupAlgebraElement& g);

/// f^d by iterated convolution; f^0 is delta_e.
GroupAlgebraElement algebra_pow(const GroupAlgebraElement& f, int d);

/// Indices with nonzero coefficient, ascending.
std::vector<int> support(const GroupAlgebraElement& f);

const Rational& coefficient(const GroupAlgebraElement& f, int index);

}  // namespace tensorinv
