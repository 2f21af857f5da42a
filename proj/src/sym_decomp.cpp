#include "tensorinv/sym_decomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tensorinv/errors.hpp"

namespace tensorinv {

namespace {

// Robinson-Schensted fiber data for S_n, built once per n.
struct RSData {
  std::vector<StandardTableau> tableaux;  // standard_tableaux_all(n) order
  std::vector<Partition> shapes;          // partitions of n, descending lex
  std::vector<int> shape_of_tableau;      // tableau index -> shape index
  std::vector<int> fiber_of_element;      // group element index -> tableau index
  std::vector<int> representative;        // tableau index -> minimal element index
};

const RSData& rs_data(const GroupPtr& sym) {
  static std::mutex mu;
  static std::map<int, RSData> cache;
  const int n = sym->parameter();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  RSData data;
  data.tableaux = standard_tableaux_all(n);
  data.shapes = partitions(n);
  std::reverse(data.shapes.begin(), data.shapes.end());
  std::map<StandardTableau, int> tableau_index;
  for (size_t i = 0; i < data.tableaux.size(); ++i)
    tableau_index.emplace(data.tableaux[i], static_cast<int>(i));
  std::map<Partition, int> shape_index;
  for (size_t i = 0; i < data.shapes.size(); ++i)
    shape_index.emplace(data.shapes[i], static_cast<int>(i));
  data.shape_of_tableau.resize(data.tableaux.size());
  for (size_t i = 0; i < data.tableaux.size(); ++i)
    data.shape_of_tableau[i] = shape_index.at(data.tableaux[i].shape());
  data.fiber_of_element.resize(sym->order());
  data.representative.assign(data.tableaux.size(), -1);
  for (int g = 0; g < sym->order(); ++g) {
    const int t = tableau_index.at(robinson_schensted(sym->permutation(g)).recording);
    data.fiber_of_element[g] = t;
    if (data.representative[t] < 0) data.representative[t] = g;  // lex order = index order
  }
  return cache.emplace(n, std::move(data)).first->second;
}

void require_symmetric(const GroupPtr& g, const char* what) {
  if (g->family() != FiniteGroup::Family::symmetric)
    throw std::invalid_argument(std::string(what) + ": requires a symmetric group");
}

MultiplicityVector multiplicities_from_values(const GroupPtr& sym,
                                              const std::vector<Rational>& per_shape) {
  const RSData& data = rs_data(sym);
  std::vector<std::pair<Partition, Integer>> entries;
  entries.reserve(data.shapes.size());
  for (size_t s = 0; s < data.shapes.size(); ++s) {
    const Rational& value = per_shape[s];
    if (!is_integral(value) || value < 0)
      throw NonIntegerMultiplicityError("multiplicity of " + data.shapes[s].to_string() +
                                        " is " + to_string(value) +
                                        ", not a non-negative integer");
    entries.emplace_back(data.shapes[s], to_integer(value));
  }
  return MultiplicityVector(std::move(entries));
}

GroupAlgebraElement element_from_counts(const GroupPtr& sym, const std::vector<Rational>& counts) {
  GroupAlgebraElement out(sym);
  for (int g = 0; g < sym->order(); ++g) out[g] = counts[g];
  return out;
}

}  // namespace

GroupAlgebraElement descent_basis_element(const GroupPtr& sym, const std::set<int>& K) {
  require_symmetric(sym, "descent_basis_element");
  const int n = sym->parameter();
  for (int k : K)
    if (k < 1 || k > n - 1)
      throw std::invalid_argument("descent_basis_element: K must be a subset of {1..n-1}");
  GroupAlgebraElement out(sym);
  for (int g = 0; g < sym->order(); ++g)
    if (descent_set(sym->permutation(g)) == K) out[g] = 1;
  return out;
}

GroupAlgebraElement z_element(const GroupPtr& sym, const StandardTableau& t) {
  require_symmetric(sym, "z_element");
  if (t.size() != sym->parameter())
    throw std::invalid_argument("z_element: tableau size does not match the group");
  const RSData& data = rs_data(sym);
  const auto it = std::find(data.tableaux.begin(), data.tableaux.end(), t);
  if (it == data.tableaux.end())
    throw std::invalid_argument("z_element: malformed tableau");
  const int index = static_cast<int>(it - data.tableaux.begin());
  GroupAlgebraElement out(sym);
  for (int g = 0; g < sym->order(); ++g)
    if (data.fiber_of_element[g] == index) out[g] = 1;
  return out;
}

const Rational& ZExpansion::coeff(const StandardTableau& t) const {
  for (size_t i = 0; i < tableaux.size(); ++i)
    if (tableaux[i] == t) return coeffs[i];
  throw std::out_of_range("ZExpansion: tableau of the wrong size");
}

ZExpansion expand_in_z_basis(const GroupAlgebraElement& f) {
  require_symmetric(f.group(), "expand_in_z_basis");
  const GroupPtr& sym = f.group();
  const RSData& data = rs_data(sym);
  ZExpansion out;
  out.n = sym->parameter();
  out.tableaux = data.tableaux;
  out.coeffs.assign(data.tableaux.size(), Rational(0));
  std::vector<int> seen_at(data.tableaux.size(), -1);
  for (int g = 0; g < sym->order(); ++g) {
    const int t = data.fiber_of_element[g];
    if (seen_at[t] < 0) {
      out.coeffs[t] = f[g];
      seen_at[t] = g;
    } else if (f[g] != out.coeffs[t]) {
      throw NotInSpanError(
          "element is not constant on the fiber of " + data.tableaux[t].to_string() +
          ": coefficient of " + sym->label(seen_at[t]) + " is " + to_string(out.coeffs[t]) +
          " but coefficient of " + sym->label(g) + " is " + to_string(f[g]));
    }
  }
  return out;
}

MultiplicityVector::MultiplicityVector(std::vector<std::pair<Partition, Integer>> entries)
    : entries_(std::move(entries)) {}

const Integer& MultiplicityVector::at(const Partition& shape) const {
  for (const auto& [p, m] : entries_)
    if (p == shape) return m;
  throw std::out_of_range("MultiplicityVector: no entry for " + shape.to_string());
}

std::string MultiplicityVector::to_string() const {
  std::string out;
  for (const auto& [p, m] : entries_) {
    if (!out.empty()) out += ", ";
    out += p.to_string() + ":" + tensorinv::to_string(m);
  }
  return out;
}

MultiplicityVector tilde_theta(const ZExpansion& z) {
  const GroupPtr sym = symmetric_group(z.n);
  const RSData& data = rs_data(sym);
  std::vector<Rational> per_shape(data.shapes.size(), Rational(0));
  for (size_t i = 0; i < z.coeffs.size(); ++i)
    per_shape[data.shape_of_tableau[i]] += z.coeffs[i];
  return multiplicities_from_values(sym, per_shape);
}

GroupAlgebraElement module_descent_element(const GroupPtr& sym, SymModule module) {
  require_symmetric(sym, "module_descent_element");
  if (sym->parameter() < 2)
    throw std::invalid_argument("module_descent_element: requires n >= 2");
  GroupAlgebraElement f = descent_basis_element(sym, {1});
  if (module == SymModule::permutation) f += GroupAlgebraElement::unit(sym);
  return f;
}

CayleyGraph module_graph(const GroupPtr& sym, SymModule module) {
  const GroupAlgebraElement f = module_descent_element(sym, module);
  std::vector<WeightedGenerator> gens;
  for (int g : support(f)) gens.push_back({g, f[g]});
  return CayleyGraph(sym, std::move(gens));
}

MultiplicityVector decompose_tensor_power(const GroupPtr& sym, SymModule module, int d) {
  if (d < 0) throw std::invalid_argument("decompose_tensor_power: d must be non-negative");
  const WalkTable walks = walk_counts(module_graph(sym, module), d);
  return tilde_theta(expand_in_z_basis(element_from_counts(sym, walks.counts)));
}

MultiplicityVector decompose_tensor_power(const GroupAlgebraElement& f, int d) {
  require_symmetric(f.group(), "decompose_tensor_power");
  if (d < 0) throw std::invalid_argument("decompose_tensor_power: d must be non-negative");
  std::vector<WeightedGenerator> gens;
  for (int g : support(f)) gens.push_back({g, f[g]});
  if (gens.empty())
    throw std::invalid_argument("decompose_tensor_power: zero element");
  const WalkTable walks = walk_counts(CayleyGraph(f.group(), std::move(gens)), d);
  return tilde_theta(expand_in_z_basis(element_from_counts(f.group(), walks.counts)));
}

const Permutation& canonical_representative(const GroupPtr& sym, const StandardTableau& t) {
  require_symmetric(sym, "canonical_representative");
  const RSData& data = rs_data(sym);
  const auto it = std::find(data.tableaux.begin(), data.tableaux.end(), t);
  if (it == data.tableaux.end())
    throw std::invalid_argument("canonical_representative: tableau size mismatch");
  return sym->permutation(data.representative[it - data.tableaux.begin()]);
}

MultiplicityVector decompose_by_representatives(const GroupPtr& sym, SymModule module, int d) {
  const RSData& data = rs_data(sym);
  const WalkTable walks = walk_counts(module_graph(sym, module), d);
  std::vector<Rational> per_shape(data.shapes.size(), Rational(0));
  for (size_t t = 0; t < data.tableaux.size(); ++t)
    per_shape[data.shape_of_tableau[t]] += walks.counts[data.representative[t]];
  return multiplicities_from_values(sym, per_shape);
}

TruncatedSeries invariant_dimension_series(const GroupPtr& sym, SymModule module, int degree) {
  return return_series(module_graph(sym, module), sym->identity(), degree);
}

TruncatedSeries free_generator_counts(const GroupPtr& sym, SymModule module, int degree) {
  return first_return_series(module_graph(sym, module), sym->identity(), degree);
}

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  // Beta numbers lambda_i + (L - i); border-strip removal of size k moves a
  // bead down k positions, with sign given by the beads jumped over.
  const int L = std::max(lambda.rows(), 1);
  std::vector<int> beta(L);
  for (int i = 0; i < L; ++i) {
    const int part = i < lambda.rows() ? lambda.part(i) : 0;
    // parts() is weakly decreasing with part(0) the largest; beta numbers use
    // the reversed convention so that entries are distinct.
    beta[i] = part + (L - 1 - i);
  }
  std::vector<int> strips(mu.parts().begin(), mu.parts().end());

  auto rec = [&](auto&& self, std::vector<int>& b, size_t next_strip) -> Integer {
    if (next_strip == strips.size()) return 1;
    const int k = strips[next_strip];
    Integer total(0);
    for (size_t i = 0; i < b.size(); ++i) {
      const int target = b[i] - k;
      if (target < 0) continue;
      if (std::find(b.begin(), b.end(), target) != b.end()) continue;
      int jumped = 0;
      for (int other : b)
        if (other > target && other < b[i]) ++jumped;
      const int old = b[i];
      b[i] = target;
      const Integer sub = self(self, b, next_strip + 1);
      b[i] = old;
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    return total;
  };
  return rec(rec, beta, 0);
}

std::vector<SymClass> sym_conjugacy_classes(int n) {
  std::vector<SymClass> out;
  const Integer nfact = factorial(n);
  for (const Partition& mu : partitions(n)) {
    // centralizer order z_mu = prod over part sizes i of i^{m_i} m_i!
    Integer z(1);
    int fixed = 0;
    std::map<int, int> mult;
    for (int part : mu.parts()) {
      ++mult[part];
      if (part == 1) ++fixed;
    }
    for (const auto& [part, count] : mult) {
      for (int c = 1; c <= count; ++c) z *= part * c;
    }
    out.push_back({mu, nfact / z, fixed});
  }
  return out;
}

MultiplicityVector oracle_decompose(int n, SymModule module, int d) {
  if (n < 2) throw std::invalid_argument("oracle_decompose: requires n >= 2");
  if (d < 0) throw std::invalid_argument("oracle_decompose: d must be non-negative");
  const auto classes = sym_conjugacy_classes(n);
  std::vector<Partition> shapes = partitions(n);
  std::reverse(shapes.begin(), shapes.end());
  const Rational inv_order = Rational(1) / Rational(factorial(n));
  std::vector<std::pair<Partition, Integer>> entries;
  for (const Partition& lambda : shapes) {
    Rational acc(0);
    for (const auto& cls : classes) {
      const int module_trace =
          module == SymModule::permutation ? cls.fixed_points : cls.fixed_points - 1;
      Integer power(1);
      for (int k = 0; k < d; ++k) power *= module_trace;
      acc += Rational(cls.size) * Rational(power) * Rational(mn_character(lambda, cls.cycle_type));
    }
    acc *= inv_order;
    if (!is_integral(acc) || acc < 0)
      throw std::logic_error("oracle_decompose: non-integer inner product for " +
                             lambda.to_string());
    entries.emplace_back(lambda, to_integer(acc));
  }
  return MultiplicityVector(std::move(entries));
}

ConjectureReport conjecture_check(int n, int degree) {
  if (n < 2) throw std::invalid_argument("conjecture_check: requires n >= 2");
  ConjectureReport report;
  report.n = n;
  report.walk_side = invariant_dimension_series(symmetric_group(n), SymModule::geometric, degree);
  // 1/(1+q) + q/(1+q) * stirling series for n-1.
  const RationalFunction one_over(IntPolynomial({Integer(1)}), IntPolynomial({Integer(1), Integer(1)}));
  const RationalFunction q_over(IntPolynomial({Integer(0), Integer(1)}),
                                IntPolynomial({Integer(1), Integer(1)}));
  report.closed_side = rational_expand(one_over, degree) +
                       rational_expand(q_over, degree) * stirling_invariant_series(n - 1, degree);
  report.all_match = true;
  for (int d = 0; d <= degree; ++d) {
    const bool match = report.walk_side.coeff(d) == report.closed_side.coeff(d);
    report.degree_match.push_back(match);
    report.all_match = report.all_match && match;
  }
  return report;
}

}  // namespace tensorinv
