#pragma once

#include <string>
#include <vector>

#include "tensorinv/rational.hpp"

namespace tensorinv {

/// Power series over Q truncated at an explicit degree.  Arithmetic on
/// operands of different truncation degrees truncates to the smaller one, so
/// the result's degree always states the range on which it is valid.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int degree);  // zero series
  static TruncatedSeries one(int degree);
  static TruncatedSeries monomial(int exponent, const Rational& coeff, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int d) const { return coeffs_.at(d); }
  void set_coeff(int d, Rational value) { coeffs_.at(d) = std::move(value); }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  /// Equal degrees and equal coefficients.
  bool operator==(const TruncatedSeries& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;  // index d holds [q^d]
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& scalar, TruncatedSeries a);

/// Dense integer-coefficient polynomial (trailing zeros trimmed).
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Integer> coeffs);
  static IntPolynomial monomial(int exponent, Integer coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Integer coeff(int d) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);

  bool operator==(const IntPolynomial&) const = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const Integer& scalar, IntPolynomial a);

/// Ratio of integer polynomials in gcd-reduced canonical form (primitive
/// numerator and denominator with no common factor; the denominator's lowest
/// nonzero coefficient is positive).
class RationalFunction {
 public:
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }

  bool operator==(const RationalFunction&) const = default;
  std::string to_string() const;

 private:
  IntPolynomial num_, den_;
};

/// Exact long-division expansion to degree D.  The denominator must have a
/// nonzero constant term.
TruncatedSeries rational_expand(const RationalFunction& r, int degree);

/// Tensor-algebra Molien series: [q^d] (1/|G|) sum over classes of
/// size/(1 - trace q).  Class sizes must sum to the group order.
TruncatedSeries molien_tensor(const std::vector<std::pair<Rational, Integer>>& trace_and_class_size,
                              const Integer& group_order, int degree);

/// F = 1 - 1/P, the free-generator series of an invariant algebra with
/// Hilbert-Poincare series P; requires P(0) = 1.
TruncatedSeries free_generator_series(const TruncatedSeries& p);

/// sum_{k=0}^{n} q^k / ((1-q)(1-2q)...(1-kq)); the coefficient of q^d counts
/// set partitions of [d] into at most n parts.
TruncatedSeries stirling_invariant_series(int n, int degree);

/// Dimension sequence d! [q^d] of sum_{k=0}^{n} (e^q - 1)^k / (k! e^q),
/// computed by exact series arithmetic over Q.
TruncatedSeries chauve_goupil_egf(int n, int degree);

}  // namespace tensorinv
