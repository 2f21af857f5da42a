#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "tensorinv/series.hpp"
#include "tensorinv/setpart.hpp"

using namespace tensorinv;

namespace {

RationalFunction rf(std::vector<long> num, std::vector<long> den) {
  std::vector<Integer> n(num.begin(), num.end()), d(den.begin(), den.end());
  return RationalFunction(IntPolynomial(std::move(n)), IntPolynomial(std::move(d)));
}

// Stirling-number DP, the independent oracle for partition counts by parts.
Integer stirling2(int d, int k) {
  if (d == 0 && k == 0) return 1;
  if (d == 0 || k == 0) return 0;
  return Integer(k) * stirling2(d - 1, k) + stirling2(d - 1, k - 1);
}

Integer partitions_up_to(int d, int n) {
  Integer total(0);
  for (int k = 0; k <= n; ++k) total += stirling2(d, k);
  return total;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  TruncatedSeries p = TruncatedSeries::one(5);
  p.set_coeff(1, Rational(-1));
  const TruncatedSeries inv = p.reciprocal();  // 1/(1-q)
  for (int d = 0; d <= 5; ++d) CHECK(inv.coeff(d) == 1);

  // Mixed degrees truncate to the smaller one.
  CHECK((TruncatedSeries::one(8) + TruncatedSeries::one(3)).degree() == 3);
  CHECK((TruncatedSeries::one(8) * TruncatedSeries::one(3)).degree() == 3);

  CHECK_THROWS_AS(TruncatedSeries(4).reciprocal(), std::domain_error);
}

TEST_CASE("reciprocal inverts random invertible series") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries p(10);
    p.set_coeff(0, Rational(den(rng)));
    for (int d = 1; d <= 10; ++d) p.set_coeff(d, make_rational(num(rng), den(rng)));
    CHECK(p * p.reciprocal() == TruncatedSeries::one(10));
  }
}

TEST_CASE("rational_expand on the published series") {
  const TruncatedSeries ones = rational_expand(rf({1}, {1, -1}), 6);
  for (int d = 0; d <= 6; ++d) CHECK(ones.coeff(d) == 1);

  const TruncatedSeries fib = rational_expand(rf({0, 0, 1}, {1, -1, -1}), 6);
  const std::vector<int> fib_expected = {0, 0, 1, 1, 2, 3, 5};
  for (int d = 0; d <= 6; ++d) CHECK(fib.coeff(d) == fib_expected[d]);

  const TruncatedSeries odd = rational_expand(rf({0, 1, -2}, {1, -3, 1}), 6);
  const std::vector<int> odd_expected = {0, 1, 1, 2, 5, 13, 34};
  for (int d = 0; d <= 6; ++d) CHECK(odd.coeff(d) == odd_expected[d]);

  CHECK_THROWS_AS(rational_expand(RationalFunction(IntPolynomial({Integer(1)}),
                                                   IntPolynomial({Integer(0), Integer(1)})),
                                  4),
                  std::domain_error);
}

TEST_CASE("rational functions reduce to canonical form") {
  CHECK(rf({2, 2}, {2}) == rf({1, 1}, {1}));
  CHECK(rf({1, 0, -1}, {1, -1}) == rf({1, 1}, {1}));  // (1-q^2)/(1-q) = 1+q
  CHECK(rf({1}, {-1, 1}) == rf({-1}, {1, -1}));       // denominator sign normalized
  CHECK(rf({0}, {3, 4}).numerator().is_zero());
  CHECK_THROWS_AS(rf({1}, {0}), std::invalid_argument);
}

TEST_CASE("molien_tensor: trivial module") {
  const TruncatedSeries p = molien_tensor({{Rational(1), Integer(1)}}, 1, 8);
  for (int d = 0; d <= 8; ++d) CHECK(p.coeff(d) == 1);
  CHECK_THROWS_AS(molien_tensor({{Rational(1), Integer(2)}}, 1, 4), std::invalid_argument);
}

TEST_CASE("molien_tensor + free-generator transform reproduce the closed forms") {
  // S3 geometric: (1/6)(1/(1-2q) + 3 + 2/(1+q)).
  const TruncatedSeries p_geo = molien_tensor(
      {{Rational(2), Integer(1)}, {Rational(0), Integer(3)}, {Rational(-1), Integer(2)}}, 6, 20);
  CHECK(free_generator_series(p_geo) == rational_expand(rf({0, 0, 1}, {1, -1, -1}), 20));

  // S3 permutation: (1/6)(1/(1-3q) + 2 + 3/(1-q)).
  const TruncatedSeries p_perm = molien_tensor(
      {{Rational(3), Integer(1)}, {Rational(1), Integer(3)}, {Rational(0), Integer(2)}}, 6, 20);
  CHECK(free_generator_series(p_perm) == rational_expand(rf({0, 1, -2}, {1, -3, 1}), 20));
}

TEST_CASE("free_generator_series") {
  const TruncatedSeries p = rational_expand(rf({1}, {1, -1}), 10);
  const TruncatedSeries f = free_generator_series(p);
  CHECK(f == TruncatedSeries::monomial(1, 1, 10));

  TruncatedSeries bad = TruncatedSeries::one(4);
  bad.set_coeff(0, 2);
  CHECK_THROWS_AS(free_generator_series(bad), std::domain_error);

  // 1/(1-F) = P for random P with P(0) = 1.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries random_p = TruncatedSeries::one(12);
    for (int d = 1; d <= 12; ++d) random_p.set_coeff(d, num(rng));
    const TruncatedSeries f2 = free_generator_series(random_p);
    CHECK((TruncatedSeries::one(12) - f2).reciprocal() == random_p);
  }
}

TEST_CASE("stirling_invariant_series counts set partitions with bounded parts") {
  const TruncatedSeries n0 = stirling_invariant_series(0, 6);
  CHECK(n0 == TruncatedSeries::one(6));

  CHECK(stirling_invariant_series(3, 4).coeff(3) == 5);
  CHECK(stirling_invariant_series(3, 4).coeff(4) == 14);

  for (int n = 0; n <= 6; ++n) {
    const TruncatedSeries p = stirling_invariant_series(n, 10);
    for (int d = 0; d <= 10; ++d) CHECK(p.coeff(d) == Rational(partitions_up_to(d, n)));
  }
}

TEST_CASE("stirling_invariant_series agrees with direct set-partition enumeration") {
  for (int n = 0; n <= 5; ++n) {
    const TruncatedSeries p = stirling_invariant_series(n, 8);
    for (int d = 0; d <= 8; ++d)
      CHECK(p.coeff(d) == Rational(Integer(enumerate_set_partitions(d, n).size())));
  }
}

TEST_CASE("chauve_goupil_egf") {
  const TruncatedSeries n1 = chauve_goupil_egf(1, 8);
  CHECK(n1.coeff(0) == 1);
  for (int d = 1; d <= 8; ++d) CHECK(n1.coeff(d) == 0);

  CHECK(chauve_goupil_egf(3, 6).coeff(4) == 3);

  // Large n: set partitions with no singleton blocks.
  for (int d = 0; d <= 8; ++d) {
    Integer singleton_free(0);
    for (const SetPartition& sp : enumerate_set_partitions(d, d)) {
      bool ok = true;
      for (const auto& block : sp.blocks()) ok = ok && block.size() >= 2;
      if (ok) ++singleton_free;
    }
    CHECK(chauve_goupil_egf(8, 8).coeff(d) == Rational(singleton_free));
  }
}
