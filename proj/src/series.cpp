#include "tensorinv/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensorinv {

TruncatedSeries::TruncatedSeries(int degree) {
  if (degree < 0) throw std::invalid_argument("series degree must be non-negative");
  coeffs_.assign(degree + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(int degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int exponent, const Rational& coeff, int degree) {
  TruncatedSeries s(degree);
  if (exponent <= degree) s.coeffs_[exponent] = coeff;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0] == 0)
    throw std::domain_error("reciprocal: constant term is zero");
  TruncatedSeries out(degree());
  const Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (int k = 1; k <= degree(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -inv0 * acc;
  }
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[d] == 0) continue;
    if (!out.empty()) out += " + ";
    out += tensorinv::to_string(coeffs_[d]);
    if (d == 1) out += "*q";
    else if (d > 1) out += "*q^" + std::to_string(d);
  }
  if (out.empty()) out = "0";
  out += " + O(q^" + std::to_string(degree() + 1) + ")";
  return out;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int degree = std::min(a.degree(), b.degree());
  TruncatedSeries out(degree);
  for (int i = 0; i <= degree; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= degree; ++j) {
      if (b.coeff(j) == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

TruncatedSeries operator*(const Rational& scalar, TruncatedSeries a) {
  a *= scalar;
  return a;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int exponent, Integer coeff) {
  std::vector<Integer> c(exponent + 1, Integer(0));
  c[exponent] = std::move(coeff);
  return IntPolynomial(std::move(c));
}

Integer IntPolynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), Integer(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), Integer(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[d] == 0) continue;
    if (!out.empty()) out += " + ";
    out += tensorinv::to_string(coeffs_[d]);
    if (d == 1) out += "*q";
    else if (d > 1) out += "*q^" + std::to_string(d);
  }
  return out;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
  a += b;
  return a;
}

IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
  a -= b;
  return a;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Integer> out(a.degree() + b.degree() + 1, Integer(0));
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const Integer& scalar, IntPolynomial a) {
  a *= scalar;
  return a;
}

namespace {

Integer content(const IntPolynomial& p) {
  Integer g(0);
  for (const auto& c : p.coeffs()) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    g = out;
  }
  return g;  // 0 for the zero polynomial
}

IntPolynomial divide_exact(const IntPolynomial& p, const Integer& d) {
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c / d);
  return IntPolynomial(std::move(out));
}

// Primitive gcd of integer polynomials via rational-coefficient Euclid.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
  auto to_rational = [](const IntPolynomial& p) {
    std::vector<Rational> out;
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
  };
  std::vector<Rational> u = to_rational(a), v = to_rational(b);
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(u);
  trim(v);
  while (!v.empty()) {
    // u mod v
    while (u.size() >= v.size() && !u.empty()) {
      const Rational factor = u.back() / v.back();
      const size_t shift = u.size() - v.size();
      for (size_t i = 0; i < v.size(); ++i) u[shift + i] -= factor * v[i];
      trim(u);
    }
    std::swap(u, v);
  }
  if (u.empty()) return IntPolynomial();
  // Clear denominators and take the primitive part.
  Integer lcm(1);
  for (const auto& c : u) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    lcm = out;
  }
  std::vector<Integer> zs;
  zs.reserve(u.size());
  for (const auto& c : u) {
    Rational scaled = c * Rational(lcm);
    zs.push_back(scaled.get_num());
  }
  IntPolynomial z(std::move(zs));
  const Integer cont = content(z);
  return divide_exact(z, cont);
}

}  // namespace

RationalFunction::RationalFunction(IntPolynomial numerator, IntPolynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw std::invalid_argument("rational function: zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial::monomial(0, 1);
    return;
  }
  const IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    // Exact division num/g, den/g via rational long division.
    auto divide_poly = [](const IntPolynomial& p, const IntPolynomial& d) {
      std::vector<Rational> rem;
      for (const auto& c : p.coeffs()) rem.emplace_back(c);
      std::vector<Rational> quot(p.degree() - d.degree() + 1, Rational(0));
      for (int k = p.degree() - d.degree(); k >= 0; --k) {
        Rational factor = rem[k + d.degree()] / Rational(d.coeff(d.degree()));
        quot[k] = factor;
        for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= factor * Rational(d.coeff(i));
      }
      std::vector<Integer> out;
      for (const auto& c : quot) out.push_back(c.get_num());  // division is exact here
      return IntPolynomial(std::move(out));
    };
    num_ = divide_poly(num_, g);
    den_ = divide_poly(den_, g);
  }
  const Integer cn = content(num_), cd = content(den_);
  Integer g2;
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  num_ = divide_exact(num_, g2);
  den_ = divide_exact(den_, g2);
  // Canonical sign: lowest nonzero denominator coefficient positive.
  for (int d = 0; d <= den_.degree(); ++d) {
    if (den_.coeff(d) == 0) continue;
    if (den_.coeff(d) < 0) {
      num_ *= Integer(-1);
      den_ *= Integer(-1);
    }
    break;
  }
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

TruncatedSeries rational_expand(const RationalFunction& r, int degree) {
  if (r.denominator().coeff(0) == 0)
    throw std::domain_error("rational_expand: denominator has zero constant term");
  TruncatedSeries out(degree);
  const Rational den0 = Rational(r.denominator().coeff(0));
  for (int k = 0; k <= degree; ++k) {
    Rational acc = Rational(r.numerator().coeff(k));
    for (int j = 1; j <= k && j <= r.denominator().degree(); ++j)
      acc -= Rational(r.denominator().coeff(j)) * out.coeff(k - j);
    out.set_coeff(k, acc / den0);
  }
  return out;
}

TruncatedSeries molien_tensor(const std::vector<std::pair<Rational, Integer>>& trace_and_class_size,
                              const Integer& group_order, int degree) {
  Integer total(0);
  for (const auto& [trace, size] : trace_and_class_size) total += size;
  if (total != group_order)
    throw std::invalid_argument("molien_tensor: class sizes do not sum to the group order");
  TruncatedSeries acc(degree);
  for (const auto& [trace, size] : trace_and_class_size) {
    // size / (1 - trace*q): geometric expansion.
    Rational power(size);
    for (int d = 0; d <= degree; ++d) {
      acc.set_coeff(d, acc.coeff(d) + power);
      power *= trace;
    }
  }
  acc *= Rational(1) / Rational(group_order);
  return acc;
}

TruncatedSeries free_generator_series(const TruncatedSeries& p) {
  if (p.coeff(0) != 1)
    throw std::domain_error("free_generator_series: P(0) must be 1");
  return TruncatedSeries::one(p.degree()) - p.reciprocal();
}

TruncatedSeries stirling_invariant_series(int n, int degree) {
  if (n < 0) throw std::invalid_argument("stirling_invariant_series: n must be non-negative");
  TruncatedSeries acc = TruncatedSeries::one(degree);
  TruncatedSeries term = TruncatedSeries::one(degree);
  for (int k = 1; k <= n && k <= degree; ++k) {
    // term *= q / (1 - kq)
    TruncatedSeries factor = TruncatedSeries::one(degree);
    factor.set_coeff(1, Rational(-k));
    term = term * TruncatedSeries::monomial(1, 1, degree) * factor.reciprocal();
    acc += term;
  }
  return acc;
}

TruncatedSeries chauve_goupil_egf(int n, int degree) {
  if (n < 0) throw std::invalid_argument("chauve_goupil_egf: n must be non-negative");
  TruncatedSeries exp_q(degree);
  Rational inv_fact(1);
  for (int d = 0; d <= degree; ++d) {
    exp_q.set_coeff(d, inv_fact);
    if (d < degree) inv_fact /= (d + 1);
  }
  const TruncatedSeries exp_minus_one = exp_q - TruncatedSeries::one(degree);
  const TruncatedSeries inv_exp = exp_q.reciprocal();
  TruncatedSeries acc(degree);
  TruncatedSeries power = TruncatedSeries::one(degree);
  Rational kfact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      power = power * exp_minus_one;
      kfact *= k;
    }
    acc += (Rational(1) / kfact) * power;
    if (k >= degree) break;  // higher powers vanish under truncation
  }
  acc = acc * inv_exp;
  // Convert exponential coefficients to the dimension sequence d! [q^d].
  TruncatedSeries out(degree);
  Rational fact(1);
  for (int d = 0; d <= degree; ++d) {
    if (d > 0) fact *= d;
    out.set_coeff(d, acc.coeff(d) * fact);
  }
  return out;
}

}  // namespace tensorinv
