#include "tensorinv/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace tensorinv {

using nlohmann::json;

namespace {

json values_to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Integer> values_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& v : j) out.emplace_back(v.get<std::string>());
  return out;
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

}  // namespace

json to_json(const DecompositionReport& r) {
  json degrees = json::array();
  for (const auto& [d, values] : r.rows) {
    json mults = json::object();
    for (size_t i = 0; i < r.labels.size(); ++i) mults[r.labels[i]] = to_string(values[i]);
    degrees.push_back({{"d", d}, {"multiplicities", mults}});
  }
  return {{"group", r.group}, {"module", r.module}, {"labels", r.labels}, {"degrees", degrees}};
}

DecompositionReport decomposition_from_json(const json& j) {
  DecompositionReport r;
  r.group = j.at("group").get<std::string>();
  r.module = j.at("module").get<std::string>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& row : j.at("degrees")) {
    std::vector<Integer> values;
    for (const auto& label : r.labels)
      values.emplace_back(row.at("multiplicities").at(label).get<std::string>());
    r.rows.emplace_back(row.at("d").get<int>(), std::move(values));
  }
  return r;
}

json to_json(const SeriesReport& r) {
  return {{"group", r.group},
          {"module", r.module},
          {"name", r.name},
          {"values", values_to_json(r.values)}};
}

SeriesReport series_from_json(const json& j) {
  SeriesReport r;
  r.group = j.at("group").get<std::string>();
  r.module = j.at("module").get<std::string>();
  r.name = j.at("name").get<std::string>();
  r.values = values_from_json(j.at("values"));
  return r;
}

json to_json(const ConjectureEvidenceReport& r) {
  return {{"n", r.n},
          {"walk", values_to_json(r.walk_values)},
          {"closed_form", values_to_json(r.closed_form_values)},
          {"all_match", r.all_match}};
}

ConjectureEvidenceReport conjecture_from_json(const json& j) {
  ConjectureEvidenceReport r;
  r.n = j.at("n").get<int>();
  r.walk_values = values_from_json(j.at("walk"));
  r.closed_form_values = values_from_json(j.at("closed_form"));
  r.all_match = j.at("all_match").get<bool>();
  return r;
}

json to_json(const OracleCompareReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"d", row.d},
                    {"walk", values_to_json(row.walk)},
                    {"oracle", values_to_json(row.oracle)},
                    {"residual", row.residual}});
  return {{"group", r.group},
          {"module", r.module},
          {"labels", r.labels},
          {"rows", rows},
          {"mismatches", r.mismatches}};
}

OracleCompareReport oracle_compare_from_json(const json& j) {
  OracleCompareReport r;
  r.group = j.at("group").get<std::string>();
  r.module = j.at("module").get<std::string>();
  r.labels = j.at("labels").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows"))
    r.rows.push_back({row.at("d").get<int>(), values_from_json(row.at("walk")),
                      values_from_json(row.at("oracle")),
                      row.at("residual").get<std::vector<std::string>>()});
  r.mismatches = j.at("mismatches").get<int>();
  return r;
}

json to_json(const GridReport& r) {
  json rows = json::array();
  for (const auto& [key, values] : r.rows)
    rows.push_back({{r.row_label, key}, {"values", values_to_json(values)}});
  return {{"name", r.name}, {"row_label", r.row_label}, {"rows", rows}};
}

GridReport grid_from_json(const json& j) {
  GridReport r;
  r.name = j.at("name").get<std::string>();
  r.row_label = j.at("row_label").get<std::string>();
  for (const auto& row : j.at("rows"))
    r.rows.emplace_back(row.at(r.row_label).get<int>(), values_from_json(row.at("values")));
  return r;
}

std::string to_csv(const DecompositionReport& r) {
  std::vector<std::string> header{"d"};
  for (const auto& label : r.labels) header.push_back(label);
  std::string out = join_csv(header);
  for (const auto& [d, values] : r.rows) {
    std::vector<std::string> cells{std::to_string(d)};
    for (const auto& v : values) cells.push_back(to_string(v));
    out += join_csv(cells);
  }
  return out;
}

std::string to_csv(const SeriesReport& r) {
  std::string out = join_csv({"d", "value"});
  for (size_t d = 0; d < r.values.size(); ++d)
    out += join_csv({std::to_string(d), to_string(r.values[d])});
  return out;
}

std::string to_csv(const ConjectureEvidenceReport& r) {
  std::string out = join_csv({"d", "walk", "closed_form", "match"});
  for (size_t d = 0; d < r.walk_values.size(); ++d)
    out += join_csv({std::to_string(d), to_string(r.walk_values[d]),
                     to_string(r.closed_form_values[d]),
                     r.walk_values[d] == r.closed_form_values[d] ? "yes" : "no"});
  return out;
}

std::string to_csv(const OracleCompareReport& r) {
  std::vector<std::string> header{"d", "side"};
  for (const auto& label : r.labels) header.push_back(label);
  std::string out = join_csv(header);
  for (const auto& row : r.rows) {
    std::vector<std::string> walk{std::to_string(row.d), "walk"};
    std::vector<std::string> oracle{std::to_string(row.d), "oracle"};
    std::vector<std::string> residual{std::to_string(row.d), "residual"};
    for (const auto& v : row.walk) walk.push_back(to_string(v));
    for (const auto& v : row.oracle) oracle.push_back(to_string(v));
    for (const auto& v : row.residual) residual.push_back(v);
    out += join_csv(walk);
    out += join_csv(oracle);
    out += join_csv(residual);
  }
  return out;
}

std::string to_csv(const GridReport& r) {
  size_t width = 0;
  for (const auto& [key, values] : r.rows) width = std::max(width, values.size());
  std::vector<std::string> header{r.row_label};
  for (size_t d = 0; d < width; ++d) header.push_back("d" + std::to_string(d));
  std::string out = join_csv(header);
  for (const auto& [key, values] : r.rows) {
    std::vector<std::string> cells{std::to_string(key)};
    for (const auto& v : values) cells.push_back(to_string(v));
    out += join_csv(cells);
  }
  return out;
}

std::string to_plain(const DecompositionReport& r) {
  std::ostringstream out;
  out << r.group << " " << r.module << " tensor-power decomposition\n";
  for (const auto& [d, values] : r.rows) {
    out << "d=" << d << ": ";
    for (size_t i = 0; i < r.labels.size(); ++i) {
      if (i) out << " ";
      out << r.labels[i] << ":" << to_string(values[i]);
    }
    out << "\n";
  }
  return out.str();
}

std::string to_plain(const SeriesReport& r) {
  std::ostringstream out;
  out << r.group << " " << r.module << " " << r.name << "\n";
  for (size_t d = 0; d < r.values.size(); ++d)
    out << "d=" << d << ": " << to_string(r.values[d]) << "\n";
  return out.str();
}

std::string to_plain(const ConjectureEvidenceReport& r) {
  std::ostringstream out;
  out << "conjecture evidence for sym:" << r.n << " geometric module\n";
  for (size_t d = 0; d < r.walk_values.size(); ++d) {
    const bool match = r.walk_values[d] == r.closed_form_values[d];
    out << "d=" << d << ": walk=" << to_string(r.walk_values[d])
        << " closed_form=" << to_string(r.closed_form_values[d])
        << (match ? " match" : " MISMATCH") << "\n";
  }
  out << (r.all_match ? "all degrees match" : "MISMATCH FOUND") << "\n";
  return out.str();
}

std::string to_plain(const OracleCompareReport& r) {
  std::ostringstream out;
  out << r.group << " " << r.module << " walk vs character oracle (residual = oracle rounding gap)\n";
  for (const auto& row : r.rows) {
    out << "d=" << row.d << ":";
    double worst = 0.0;
    for (size_t i = 0; i < r.labels.size(); ++i) {
      out << " " << r.labels[i] << ":" << to_string(row.walk[i]);
      if (row.walk[i] != row.oracle[i]) out << "(oracle " << to_string(row.oracle[i]) << "!)";
      worst = std::max(worst, std::atof(row.residual[i].c_str()));
    }
    out << "  residual<=" << std::scientific << worst << std::defaultfloat << "\n";
  }
  out << "mismatches: " << r.mismatches << "\n";
  return out.str();
}

std::string to_plain(const GridReport& r) {
  std::ostringstream out;
  out << r.name << " (rows: " << r.row_label << ", columns: degree)\n";
  for (const auto& [key, values] : r.rows) {
    out << r.row_label << "=" << key << ":";
    for (const auto& v : values) out << " " << to_string(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace tensorinv
