#include "tensorinv/group_algebra.hpp"

#include <stdexcept>

#include "tensorinv/errors.hpp"

namespace tensorinv {

namespace {
void require_same_group(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.group().get() != b.group().get())
    throw GroupMismatchError("group algebra elements belong to different groups");
}
}  // namespace

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), Rational(0)) {}

GroupAlgebraElement GroupAlgebraElement::unit(GroupPtr group) {
  return delta(std::move(group), 0);
}

GroupAlgebraElement GroupAlgebraElement::delta(GroupPtr group, int index) {
  GroupAlgebraElement out(std::move(group));
  out[index] = 1;
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_same_group(*this, other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  require_same_group(*this, other);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& other) const {
  return group_.get() == other.group_.get() && coeffs_ == other.coeffs_;
}

std::string GroupAlgebraElement::to_string() const {
  std::string out;
  for (int i = 0; i < group_->order(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += tensorinv::to_string(coeffs_[i]) + " " + group_->label(i);
  }
  return out.empty() ? "0" : out;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  a += b;
  return a;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  a -= b;
  return a;
}

GroupAlgebraElement operator*(const Rational& scalar, GroupAlgebraElement a) {
  a *= scalar;
  return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  require_same_group(f, g);
  const auto& group = *f.group();
  GroupAlgebraElement out(f.group());
  for (int i = 0; i < group.order(); ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; j < group.order(); ++j) {
      if (g[j] == 0) continue;
      out[group.mult(i, j)] += f[i] * g[j];
    }
  }
  return out;
}

GroupAlgebraElement algebra_pow(const GroupAlgebraElement& f, int d) {
  if (d < 0) throw std::invalid_argument("algebra_pow: exponent must be non-negative");
  GroupAlgebraElement out = GroupAlgebraElement::unit(f.group());
  for (int k = 0; k < d; ++k) out = out * f;
  return out;
}

std::vector<int> support(const GroupAlgebraElement& f) {
  std::vector<int> out;
  for (int i = 0; i < f.group()->order(); ++i)
    if (f[i] != 0) out.push_back(i);
  return out;
}

const Rational& coefficient(const GroupAlgebraElement& f, int index) {
  if (index < 0 || index >= f.group()->order())
    throw std::out_of_range("coefficient: element index out of range");
  return f[index];
}

}  // namespace tensorinv
