#include "tensorinv/dihedral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tensorinv/errors.hpp"

namespace tensorinv {

namespace {

void require_dihedral(const GroupPtr& g, const char* what) {
  if (g->family() != FiniteGroup::Family::dihedral)
    throw std::invalid_argument(std::string(what) + ": requires a dihedral group");
}

GroupAlgebraElement sum_of(const GroupPtr& g, std::initializer_list<int> indices) {
  GroupAlgebraElement out(g);
  for (int i : indices) out[i] = 1;
  return out;
}

}  // namespace

std::string DihedralCharLabel::to_string() const {
  switch (kind) {
    case Kind::id: return "id";
    case Kind::eps: return "eps";
    case Kind::gamma: return "gamma";
    case Kind::gamma_eps: return "gamma_eps";
    case Kind::chi: return "chi_" + std::to_string(index);
  }
  return "?";
}

std::vector<DihedralCharLabel> dihedral_labels(int m) {
  if (m < 3) throw std::invalid_argument("dihedral_labels: requires m >= 3");
  std::vector<DihedralCharLabel> out;
  out.push_back({DihedralCharLabel::Kind::id, 0});
  out.push_back({DihedralCharLabel::Kind::eps, 0});
  const bool even = m % 2 == 0;
  if (even) {
    out.push_back({DihedralCharLabel::Kind::gamma, 0});
    out.push_back({DihedralCharLabel::Kind::gamma_eps, 0});
  }
  const int top = even ? m / 2 - 1 : (m - 1) / 2;
  for (int j = 1; j <= top; ++j) out.push_back(DihedralCharLabel::chi(j));
  return out;
}

std::vector<QBasisElement> q_basis(const GroupPtr& dihedral) {
  require_dihedral(dihedral, "q_basis");
  const int m = dihedral->parameter();
  if (m < 3) throw std::invalid_argument("q_basis: requires m >= 3");
  const auto rot = [&](int i) { return dihedral->dihedral_index(i, false); };
  const auto refl = [&](int i) { return dihedral->dihedral_index(i, true); };

  std::vector<QBasisElement> out;
  out.push_back({{DihedralCharLabel::Kind::id, 0}, false, sum_of(dihedral, {rot(0)})});
  const bool even = m % 2 == 0;
  const int k = m / 2;
  if (even)
    out.push_back({{DihedralCharLabel::Kind::gamma, 0}, false, sum_of(dihedral, {rot(k)})});
  out.push_back({{DihedralCharLabel::Kind::eps, 0}, false, sum_of(dihedral, {refl(1)})});
  if (even)
    out.push_back({{DihedralCharLabel::Kind::gamma_eps, 0}, false, sum_of(dihedral, {refl(k + 1)})});
  const int top = even ? k - 1 : (m - 1) / 2;
  for (int i = 1; i <= top; ++i) {
    // y_i = r^{1-i} s + r^i and y_i rs = r^{-i} + r^{i+1} s.
    out.push_back({DihedralCharLabel::chi(i), false, sum_of(dihedral, {refl(1 - i), rot(i)})});
    out.push_back({DihedralCharLabel::chi(i), true, sum_of(dihedral, {rot(-i), refl(i + 1)})});
  }
  return out;
}

QProductTable verify_subalgebra(const GroupPtr& dihedral) {
  const auto basis = q_basis(dihedral);
  const int m = dihedral->parameter();

  // Support -> basis index lookup; also confirms the supports partition D_m.
  std::vector<int> owner(dihedral->order(), -1);
  for (size_t b = 0; b < basis.size(); ++b) {
    for (int g : support(basis[b].element)) {
      if (owner[g] >= 0)
        throw NotInSpanError("q_basis supports overlap at " + dihedral->label(g));
      owner[g] = static_cast<int>(b);
    }
  }
  for (int g = 0; g < dihedral->order(); ++g)
    if (owner[g] < 0)
      throw NotInSpanError("q_basis supports do not cover " + dihedral->label(g));

  QProductTable table;
  table.m = m;
  table.coords.resize(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    table.coords[i].resize(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      const GroupAlgebraElement product = basis[i].element * basis[j].element;
      std::vector<Rational> coords(basis.size(), Rational(0));
      std::vector<bool> seen(basis.size(), false);
      for (int g = 0; g < dihedral->order(); ++g) {
        const int b = owner[g];
        if (!seen[b]) {
          coords[b] = product[g];
          seen[b] = true;
        } else if (product[g] != coords[b]) {
          throw NotInSpanError("product b_" + std::to_string(i) + " b_" + std::to_string(j) +
                               " is not constant on the support of basis element " +
                               std::to_string(b));
        }
      }
      // Homomorphism gate: theta(b_i b_j) = theta(b_i) theta(b_j) as
      // characters, compared pointwise in double precision.
      for (int g = 0; g < dihedral->order(); ++g) {
        double lhs = 0.0;
        for (size_t b = 0; b < basis.size(); ++b)
          lhs += coords[b].get_d() * character_value(m, basis[b].label, g);
        const double rhs =
            character_value(m, basis[i].label, g) * character_value(m, basis[j].label, g);
        if (std::abs(lhs - rhs) > 1e-6)
          throw NotInSpanError("theta is not multiplicative on b_" + std::to_string(i) + " b_" +
                               std::to_string(j) + " at " + dihedral->label(g));
      }
      table.coords[i][j] = std::move(coords);
    }
  }
  return table;
}

std::string to_string(const DihedralMultiplicities& mults) {
  std::string out;
  for (const auto& [label, value] : mults) {
    if (!out.empty()) out += ", ";
    out += label.to_string() + ":" + tensorinv::to_string(value);
  }
  return out;
}

const Integer& multiplicity_of(const DihedralMultiplicities& mults,
                               const DihedralCharLabel& label) {
  for (const auto& [l, v] : mults)
    if (l == label) return v;
  throw std::out_of_range("no multiplicity for " + label.to_string());
}

DihedralMultiplicities decompose_tensor_power_dihedral(const GroupPtr& dihedral,
                                                       const std::vector<Integer>& coeffs, int d) {
  const auto basis = q_basis(dihedral);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("decompose_tensor_power_dihedral: expected " +
                                std::to_string(basis.size()) + " basis coefficients");
  GroupAlgebraElement f(dihedral);
  bool any = false;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] < 0)
      throw std::invalid_argument(
          "decompose_tensor_power_dihedral: coefficients must be non-negative");
    if (coeffs[i] == 0) continue;
    any = true;
    f += Rational(coeffs[i]) * basis[i].element;
  }
  if (!any || d < 0)
    throw std::invalid_argument("decompose_tensor_power_dihedral: need a nonzero module and d >= 0");

  std::vector<WeightedGenerator> gens;
  for (int g : support(f)) gens.push_back({g, f[g]});
  const WalkTable walks = walk_counts(CayleyGraph(dihedral, std::move(gens)), d);

  DihedralMultiplicities out;
  for (const DihedralCharLabel& label : dihedral_labels(dihedral->parameter()))
    out.emplace_back(label, Integer(0));
  for (const auto& b : basis) {
    const int representative = support(b.element).front();
    const Rational& value = walks.counts[representative];
    for (auto& [label, total] : out)
      if (label == b.label) total += to_integer(value);
  }
  return out;
}

std::vector<Integer> geometric_module_coeffs(const GroupPtr& dihedral) {
  const auto basis = q_basis(dihedral);
  std::vector<Integer> coeffs(basis.size(), Integer(0));
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i].label == DihedralCharLabel::chi(1) && !basis[i].secondary) coeffs[i] = 1;
  return coeffs;
}

namespace {
CayleyGraph rs_graph(const GroupPtr& dihedral) {
  return CayleyGraph(dihedral, {{dihedral->dihedral_index(1, false), Rational(1)},
                                {dihedral->dihedral_index(0, true), Rational(1)}});
}
}  // namespace

TruncatedSeries geometric_invariant_series(const GroupPtr& dihedral, int degree) {
  require_dihedral(dihedral, "geometric_invariant_series");
  return return_series(rs_graph(dihedral), dihedral->identity(), degree);
}

TruncatedSeries dihedral_free_generator_series(const GroupPtr& dihedral, int degree) {
  require_dihedral(dihedral, "dihedral_free_generator_series");
  return first_return_series(rs_graph(dihedral), dihedral->identity(), degree);
}

RationalFunction hilbert_poincare_closed_form(int m) {
  if (m < 3) throw std::invalid_argument("hilbert_poincare_closed_form: requires m >= 3");
  // (2q)^m and powers of u = 1 - 4q^2 as exact integer polynomials.
  IntPolynomial two_q_m = IntPolynomial::monomial(m, Integer(1) << m);
  IntPolynomial u({Integer(1), Integer(0), Integer(-4)});
  IntPolynomial numerator = two_q_m;
  IntPolynomial denominator = Integer(-1) * two_q_m;
  IntPolynomial u_power = IntPolynomial::monomial(0, 1);
  for (int i = 0; i <= m / 2; ++i) {
    if (i > 0) u_power = u_power * u;
    numerator += (binomial(m + 1, 2 * i + 1) - 2 * binomial(m, 2 * i)) * u_power;
    denominator += binomial(m, 2 * i) * u_power;
  }
  // P = 1 + numerator / (2 denominator).
  const IntPolynomial two_den = Integer(2) * denominator;
  return RationalFunction(two_den + numerator, two_den);
}

TruncatedSeries hilbert_poincare_closed(int m, int degree) {
  return rational_expand(hilbert_poincare_closed_form(m), degree);
}

double character_value(int m, const DihedralCharLabel& label, int element_index) {
  const int rot = element_index % m;
  const bool refl = element_index >= m;
  switch (label.kind) {
    case DihedralCharLabel::Kind::id:
      return 1.0;
    case DihedralCharLabel::Kind::eps:
      return refl ? -1.0 : 1.0;
    case DihedralCharLabel::Kind::gamma:
      return rot % 2 == 0 ? 1.0 : -1.0;
    case DihedralCharLabel::Kind::gamma_eps: {
      const int sign = (rot + (refl ? 1 : 0)) % 2;
      return sign == 0 ? 1.0 : -1.0;
    }
    case DihedralCharLabel::Kind::chi:
      if (refl) return 0.0;  // trace of an antidiagonal 2x2 matrix
      return 2.0 * std::cos(2.0 * std::numbers::pi * label.index * rot / m);
  }
  return 0.0;
}

DihedralMultiplicities dihedral_oracle_decompose(const GroupPtr& dihedral,
                                                 const std::vector<Integer>& coeffs, int d,
                                                 std::vector<double>* residuals) {
  const auto basis = q_basis(dihedral);
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("dihedral_oracle_decompose: expected " +
                                std::to_string(basis.size()) + " basis coefficients");
  const int m = dihedral->parameter();
  const int order = dihedral->order();
  // chi^V(g) = sum_i c_i chi^{theta(b_i)}(g).
  std::vector<double> module_char(order, 0.0);
  for (int g = 0; g < order; ++g)
    for (size_t i = 0; i < basis.size(); ++i)
      module_char[g] += coeffs[i].get_d() * character_value(m, basis[i].label, g);

  if (residuals) residuals->clear();
  DihedralMultiplicities out;
  for (const DihedralCharLabel& label : dihedral_labels(m)) {
    double acc = 0.0;
    for (int g = 0; g < order; ++g)
      acc += std::pow(module_char[g], d) * character_value(m, label, g);
    acc /= order;
    const double rounded = std::round(acc);
    if (std::abs(acc - rounded) >= 1e-6)
      throw RoundingGapError("inner product for " + label.to_string() +
                             " is not within 1e-6 of an integer: " + std::to_string(acc));
    if (residuals) residuals->push_back(std::abs(acc - rounded));
    out.emplace_back(label, Integer(static_cast<long>(rounded)));
  }
  return out;
}

}  // namespace tensorinv
