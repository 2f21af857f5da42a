#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tensorinv/rational.hpp"

#include "json.hpp"

namespace tensorinv {

/// Result tables produced by the command-line front end.  All numeric cells
/// are exact integers rendered as decimal strings in JSON and CSV, so output
/// parses back losslessly at any magnitude.

struct DecompositionReport {
  std::string group;   // "sym:3" or "dihedral:4"
  std::string module;  // "geometric", "permutation", "custom:..."
  std::vector<std::string> labels;
  std::vector<std::pair<int, std::vector<Integer>>> rows;  // (d, values per label)
  bool operator==(const DecompositionReport&) const = default;
};

struct SeriesReport {
  std::string group;
  std::string module;
  std::string name;  // "invariant_dimensions" or "free_generators"
  std::vector<Integer> values;  // index = degree
  bool operator==(const SeriesReport&) const = default;
};

struct ConjectureEvidenceReport {
  int n = 0;
  std::vector<Integer> walk_values;
  std::vector<Integer> closed_form_values;
  bool all_match = false;
  bool operator==(const ConjectureEvidenceReport&) const = default;
};

struct OracleCompareReport {
  std::string group;
  std::string module;
  std::vector<std::string> labels;
  struct Row {
    int d = 0;
    std::vector<Integer> walk;
    std::vector<Integer> oracle;
    // |oracle value - rounded| per label as decimal text; "0" for the exact
    // symmetric-group oracle.
    std::vector<std::string> residual;
    bool operator==(const Row&) const = default;
  };
  std::vector<Row> rows;
  int mismatches = 0;
  bool operator==(const OracleCompareReport&) const = default;
};

/// Appendix-style table: one row per group size, one column per degree.
struct GridReport {
  std::string name;
  std::string row_label;  // "n" or "m"
  std::vector<std::pair<int, std::vector<Integer>>> rows;
  bool operator==(const GridReport&) const = default;
};

nlohmann::json to_json(const DecompositionReport&);
nlohmann::json to_json(const SeriesReport&);
nlohmann::json to_json(const ConjectureEvidenceReport&);
nlohmann::json to_json(const OracleCompareReport&);
nlohmann::json to_json(const GridReport&);

DecompositionReport decomposition_from_json(const nlohmann::json&);
SeriesReport series_from_json(const nlohmann::json&);
ConjectureEvidenceReport conjecture_from_json(const nlohmann::json&);
OracleCompareReport oracle_compare_from_json(const nlohmann::json&);
GridReport grid_from_json(const nlohmann::json&);

std::string to_csv(const DecompositionReport&);
std::string to_csv(const SeriesReport&);
std::string to_csv(const ConjectureEvidenceReport&);
std::string to_csv(const OracleCompareReport&);
std::string to_csv(const GridReport&);

std::string to_plain(const DecompositionReport&);
std::string to_plain(const SeriesReport&);
std::string to_plain(const ConjectureEvidenceReport&);
std::string to_plain(const OracleCompareReport&);
std::string to_plain(const GridReport&);

}  // namespace tensorinv
