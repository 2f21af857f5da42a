#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tensorinv/report.hpp"

using namespace tensorinv;

namespace {

Integer big() {
  // Larger than any 64-bit integer; decimal-string cells must survive it.
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 10, 30);
  return v + 7;
}

}  // namespace

TEST_CASE("decomposition report round-trips through JSON") {
  DecompositionReport r;
  r.group = "sym:3";
  r.module = "geometric";
  r.labels = {"(3)", "(2,1)", "(1,1,1)"};
  r.rows = {{0, {Integer(1), Integer(0), Integer(0)}}, {4, {Integer(3), big(), Integer(3)}}};
  const auto j = to_json(r);
  CHECK(decomposition_from_json(j) == r);
  CHECK(decomposition_from_json(nlohmann::json::parse(j.dump())) == r);
  CHECK(j.at("degrees").at(1).at("multiplicities").at("(2,1)").get<std::string>() ==
        to_string(big()));
}

TEST_CASE("series report round-trips through JSON") {
  SeriesReport r;
  r.group = "dihedral:5";
  r.module = "geometric";
  r.name = "invariant_dimensions";
  r.values = {Integer(1), Integer(0), Integer(1), big()};
  CHECK(series_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("conjecture report round-trips through JSON") {
  ConjectureEvidenceReport r;
  r.n = 4;
  r.walk_values = {Integer(1), Integer(0), Integer(1)};
  r.closed_form_values = {Integer(1), Integer(0), Integer(1)};
  r.all_match = true;
  CHECK(conjecture_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("oracle-compare report round-trips through JSON") {
  OracleCompareReport r;
  r.group = "sym:4";
  r.module = "permutation";
  r.labels = {"(4)", "(3,1)"};
  r.rows = {{0, {Integer(1), Integer(0)}, {Integer(1), Integer(0)}, {"0", "0"}},
            {2, {Integer(2), big()}, {Integer(2), big()}, {"0", "4.4e-13"}}};
  r.mismatches = 0;
  CHECK(oracle_compare_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("grid report round-trips through JSON and renders CSV") {
  GridReport r;
  r.name = "sym-geometric-dims";
  r.row_label = "n";
  r.rows = {{2, {Integer(1), Integer(0), Integer(1)}}, {3, {Integer(1), Integer(0), big()}}};
  CHECK(grid_from_json(nlohmann::json::parse(to_json(r).dump())) == r);

  const std::string csv = to_csv(r);
  CHECK(csv.find("n,d0,d1,d2") == 0);
  CHECK(csv.find(to_string(big())) != std::string::npos);
}
