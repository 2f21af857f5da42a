#include "tensorinv/cayley.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tensorinv {

CayleyGraph::CayleyGraph(GroupPtr group, std::vector<WeightedGenerator> generators)
    : group_(std::move(group)) {
  if (generators.empty())
    throw std::invalid_argument("cayley graph: generator list is empty");
  std::map<int, Rational> merged;
  for (const auto& gen : generators) {
    if (gen.element < 0 || gen.element >= group_->order())
      throw std::out_of_range("cayley graph: generator index out of range");
    merged[gen.element] += gen.weight;
  }
  for (const auto& [element, weight] : merged) {
    if (weight == 0)
      throw std::invalid_argument("cayley graph: generator weight is zero");
    generators_.push_back({element, weight});
  }
}

GroupAlgebraElement CayleyGraph::generator_sum() const {
  GroupAlgebraElement f(group_);
  for (const auto& gen : generators_) f[gen.element] += gen.weight;
  return f;
}

namespace {

// One step of the vector recursion: counts <- counts * (sum w_i s_i).
std::vector<Rational> step(const CayleyGraph& graph, const std::vector<Rational>& counts) {
  const auto& group = *graph.group();
  std::vector<Rational> next(counts.size(), Rational(0));
  for (int g = 0; g < group.order(); ++g) {
    if (counts[g] == 0) continue;
    for (const auto& gen : graph.generators())
      next[group.mult(g, gen.element)] += counts[g] * gen.weight;
  }
  return next;
}

std::vector<Rational> delta_identity(const CayleyGraph& graph) {
  std::vector<Rational> v(graph.group()->order(), Rational(0));
  v[graph.group()->identity()] = 1;
  return v;
}

}  // namespace

WalkTable walk_counts(const CayleyGraph& graph, int d) {
  if (d < 0) throw std::invalid_argument("walk_counts: degree must be non-negative");
  std::vector<Rational> v = delta_identity(graph);
  for (int k = 0; k < d; ++k) v = step(graph, v);
  return WalkTable{d, std::move(v)};
}

WalkTable first_return_counts(const CayleyGraph& graph, int d) {
  if (d < 1)
    throw std::invalid_argument("first_return_counts: degree must be >= 1 (the empty word is excluded)");
  std::vector<Rational> v = delta_identity(graph);
  for (int k = 1; k <= d; ++k) {
    v = step(graph, v);
    if (k < d) v[graph.group()->identity()] = 0;
  }
  return WalkTable{d, std::move(v)};
}

TruncatedSeries return_series(const CayleyGraph& graph, int target, int degree) {
  if (target < 0 || target >= graph.group()->order())
    throw std::out_of_range("return_series: target index out of range");
  TruncatedSeries out(degree);
  std::vector<Rational> v = delta_identity(graph);
  out.set_coeff(0, v[target]);
  for (int d = 1; d <= degree; ++d) {
    v = step(graph, v);
    out.set_coeff(d, v[target]);
  }
  return out;
}

TruncatedSeries first_return_series(const CayleyGraph& graph, int target, int degree) {
  if (target < 0 || target >= graph.group()->order())
    throw std::out_of_range("first_return_series: target index out of range");
  TruncatedSeries out(degree);  // [q^0] stays 0
  std::vector<Rational> v = delta_identity(graph);
  for (int d = 1; d <= degree; ++d) {
    v = step(graph, v);
    out.set_coeff(d, v[target]);
    v[graph.group()->identity()] = 0;
  }
  return out;
}

}  // namespace tensorinv
