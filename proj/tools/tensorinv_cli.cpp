// Command-line front end: tensor-power decompositions, dimension and
// free-generator tables, conjecture evidence, and walk-vs-oracle comparison
// for symmetric and dihedral groups.  All table cells are exact integers.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tensorinv/cayley.hpp"
#include "tensorinv/dihedral.hpp"
#include "tensorinv/errors.hpp"
#include "tensorinv/group.hpp"
#include "tensorinv/report.hpp"
#include "tensorinv/series.hpp"
#include "tensorinv/sym_decomp.hpp"

using namespace tensorinv;

namespace {

constexpr int kDefaultMaxDegree = 64;
constexpr int kMaxSymN = 8;
constexpr int kMaxDihedralM = 24;

int max_degree() {
  if (const char* env = std::getenv("TENSORINV_MAX_DEGREE")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return kDefaultMaxDegree;
}

struct GroupSpec {
  bool symmetric = true;
  int parameter = 0;
  std::string text;
};

GroupSpec parse_group(const std::string& text) {
  GroupSpec spec;
  spec.text = text;
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--group", "expected sym:N or dihedral:M");
  const std::string kind = text.substr(0, colon);
  const int parameter = std::atoi(text.c_str() + colon + 1);
  if (kind == "sym") {
    if (parameter < 2 || parameter > kMaxSymN)
      throw CLI::ValidationError("--group", "sym:N requires 2 <= N <= " + std::to_string(kMaxSymN));
    spec.symmetric = true;
  } else if (kind == "dihedral") {
    if (parameter < 3 || parameter > kMaxDihedralM)
      throw CLI::ValidationError("--group",
                                 "dihedral:M requires 3 <= M <= " + std::to_string(kMaxDihedralM));
    spec.symmetric = false;
  } else {
    throw CLI::ValidationError("--group", "expected sym:N or dihedral:M");
  }
  spec.parameter = parameter;
  return spec;
}

struct ModuleSpec {
  enum class Kind { geometric, permutation, custom };
  Kind kind = Kind::geometric;
  std::vector<Integer> coeffs;  // custom only
  std::string text;
};

ModuleSpec parse_module(const std::string& text) {
  ModuleSpec spec;
  spec.text = text;
  if (text == "geometric") {
    spec.kind = ModuleSpec::Kind::geometric;
  } else if (text == "permutation") {
    spec.kind = ModuleSpec::Kind::permutation;
  } else if (text.rfind("custom:", 0) == 0) {
    spec.kind = ModuleSpec::Kind::custom;
    std::string rest = text.substr(7);
    size_t pos = 0;
    while (pos <= rest.size()) {
      const size_t comma = rest.find(',', pos);
      const std::string cell = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (cell.empty()) throw CLI::ValidationError("--module", "empty custom coefficient");
      try {
        spec.coeffs.emplace_back(cell);
      } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--module", "bad custom coefficient '" + cell + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    throw CLI::ValidationError("--module", "expected geometric, permutation, or custom:<coeffs>");
  }
  return spec;
}

// Custom symmetric modules are coefficient lists over the D_K basis in
// bitmask order: index b encodes K = {i : bit i-1 of b is set}.
GroupAlgebraElement custom_sym_element(const GroupPtr& sym, const std::vector<Integer>& coeffs) {
  const int n = sym->parameter();
  const size_t expected = size_t(1) << (n - 1);
  if (coeffs.size() != expected)
    throw CLI::ValidationError("--module", "custom for sym:" + std::to_string(n) + " needs " +
                                               std::to_string(expected) +
                                               " coefficients (D_K basis, bitmask order)");
  GroupAlgebraElement f(sym);
  for (size_t mask = 0; mask < expected; ++mask) {
    if (coeffs[mask] == 0) continue;
    std::set<int> K;
    for (int i = 1; i < n; ++i)
      if (mask & (size_t(1) << (i - 1))) K.insert(i);
    f += Rational(coeffs[mask]) * descent_basis_element(sym, K);
  }
  return f;
}

struct CommonOptions {
  std::string group = "sym:3";
  std::string module = "geometric";
  int degree = 8;
  std::string format = "plain";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_module = true) {
  cmd->add_option("--group", opts.group, "group: sym:N (N <= 8) or dihedral:M (M <= 24)");
  if (with_module)
    cmd->add_option("--module", opts.module,
                    "module: geometric | permutation | custom:<comma-separated coefficients>");
  cmd->add_option("--degree", opts.degree, "degree bound D");
  cmd->add_option("--format", opts.format, "output format: json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--out", opts.out, "write output to FILE instead of stdout");
}

void check_degree(int degree) {
  if (degree < 0) throw CLI::ValidationError("--degree", "degree must be non-negative");
  if (degree > max_degree())
    throw CLI::ValidationError("--degree", "degree exceeds the cap " +
                                               std::to_string(max_degree()) +
                                               " (override via TENSORINV_MAX_DEGREE)");
}

void emit(const CommonOptions& opts, const std::string& plain, const std::string& csv,
          const nlohmann::json& json) {
  std::string text;
  if (opts.format == "json")
    text = json.dump(2) + "\n";
  else if (opts.format == "csv")
    text = csv;
  else
    text = plain;
  if (opts.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(opts.out);
    if (!file) throw std::runtime_error("cannot open output file " + opts.out);
    file << text;
  }
}

std::vector<std::string> sym_labels(int n) {
  std::vector<Partition> shapes = partitions(n);
  std::vector<std::string> labels;
  for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) labels.push_back(it->to_string());
  return labels;
}

std::vector<std::string> dihedral_label_names(int m) {
  std::vector<std::string> labels;
  for (const auto& label : dihedral_labels(m)) labels.push_back(label.to_string());
  return labels;
}

std::vector<Integer> row_values(const MultiplicityVector& v) {
  std::vector<Integer> out;
  for (const auto& [shape, mult] : v.entries()) out.push_back(mult);
  return out;
}

std::vector<Integer> row_values(const DihedralMultiplicities& v) {
  std::vector<Integer> out;
  for (const auto& [label, mult] : v) out.push_back(mult);
  return out;
}

std::vector<Integer> series_values(const TruncatedSeries& s) {
  std::vector<Integer> out;
  for (int d = 0; d <= s.degree(); ++d) {
    if (!is_integral(s.coeff(d)))
      throw std::logic_error("series coefficient is not an integer");
    out.push_back(to_integer(s.coeff(d)));
  }
  return out;
}

std::vector<Integer> dihedral_custom_coeffs(const GroupPtr& g, const ModuleSpec& module) {
  switch (module.kind) {
    case ModuleSpec::Kind::geometric:
      return geometric_module_coeffs(g);
    case ModuleSpec::Kind::permutation:
      throw CLI::ValidationError("--module", "permutation module is defined for sym groups only");
    case ModuleSpec::Kind::custom: {
      const auto basis = q_basis(g);
      if (module.coeffs.size() != basis.size())
        throw CLI::ValidationError("--module", "custom for dihedral:" +
                                                   std::to_string(g->parameter()) + " needs " +
                                                   std::to_string(basis.size()) +
                                                   " coefficients (q-basis order)");
      return module.coeffs;
    }
  }
  throw std::logic_error("unreachable");
}

DecompositionReport run_decompose(const GroupSpec& group, const ModuleSpec& module, int degree) {
  DecompositionReport report;
  report.group = group.text;
  report.module = module.text;
  if (group.symmetric) {
    const GroupPtr sym = symmetric_group(group.parameter);
    report.labels = sym_labels(group.parameter);
    for (int d = 0; d <= degree; ++d) {
      MultiplicityVector v;
      switch (module.kind) {
        case ModuleSpec::Kind::geometric:
          v = decompose_tensor_power(sym, SymModule::geometric, d);
          break;
        case ModuleSpec::Kind::permutation:
          v = decompose_tensor_power(sym, SymModule::permutation, d);
          break;
        case ModuleSpec::Kind::custom:
          v = decompose_tensor_power(custom_sym_element(sym, module.coeffs), d);
          break;
      }
      report.rows.emplace_back(d, row_values(v));
    }
  } else {
    const GroupPtr g = dihedral_group(group.parameter);
    report.labels = dihedral_label_names(group.parameter);
    const auto coeffs = dihedral_custom_coeffs(g, module);
    for (int d = 0; d <= degree; ++d)
      report.rows.emplace_back(d, row_values(decompose_tensor_power_dihedral(g, coeffs, d)));
  }
  return report;
}

SeriesReport run_series(const GroupSpec& group, const ModuleSpec& module, int degree,
                        bool free_generators) {
  SeriesReport report;
  report.group = group.text;
  report.module = module.text;
  report.name = free_generators ? "free_generators" : "invariant_dimensions";
  if (group.symmetric) {
    const GroupPtr sym = symmetric_group(group.parameter);
    CayleyGraph graph = [&] {
      switch (module.kind) {
        case ModuleSpec::Kind::geometric:
          return module_graph(sym, SymModule::geometric);
        case ModuleSpec::Kind::permutation:
          return module_graph(sym, SymModule::permutation);
        case ModuleSpec::Kind::custom: {
          const GroupAlgebraElement f = custom_sym_element(sym, module.coeffs);
          std::vector<WeightedGenerator> gens;
          for (int g : support(f)) gens.push_back({g, f[g]});
          return CayleyGraph(sym, std::move(gens));
        }
      }
      throw std::logic_error("unreachable");
    }();
    report.values = series_values(free_generators
                                      ? first_return_series(graph, sym->identity(), degree)
                                      : return_series(graph, sym->identity(), degree));
  } else {
    const GroupPtr g = dihedral_group(group.parameter);
    if (module.kind == ModuleSpec::Kind::geometric) {
      report.values = series_values(free_generators
                                        ? dihedral_free_generator_series(g, degree)
                                        : geometric_invariant_series(g, degree));
    } else {
      const auto coeffs = dihedral_custom_coeffs(g, module);
      const auto basis = q_basis(g);
      GroupAlgebraElement f(g);
      for (size_t i = 0; i < basis.size(); ++i) f += Rational(coeffs[i]) * basis[i].element;
      std::vector<WeightedGenerator> gens;
      for (int idx : support(f)) gens.push_back({idx, f[idx]});
      const CayleyGraph graph(g, std::move(gens));
      report.values = series_values(free_generators
                                        ? first_return_series(graph, g->identity(), degree)
                                        : return_series(graph, g->identity(), degree));
    }
  }
  return report;
}

OracleCompareReport run_oracle_compare(const GroupSpec& group, const ModuleSpec& module,
                                       int degree) {
  OracleCompareReport report;
  report.group = group.text;
  report.module = module.text;
  if (group.symmetric) {
    if (module.kind == ModuleSpec::Kind::custom)
      throw CLI::ValidationError("--module", "oracle-compare supports geometric and permutation");
    const SymModule sym_module =
        module.kind == ModuleSpec::Kind::geometric ? SymModule::geometric : SymModule::permutation;
    const GroupPtr sym = symmetric_group(group.parameter);
    report.labels = sym_labels(group.parameter);
    for (int d = 0; d <= degree; ++d) {
      OracleCompareReport::Row row;
      row.d = d;
      row.walk = row_values(decompose_tensor_power(sym, sym_module, d));
      row.oracle = row_values(oracle_decompose(group.parameter, sym_module, d));
      row.residual.assign(report.labels.size(), "0");  // exact integer oracle
      if (row.walk != row.oracle) ++report.mismatches;
      report.rows.push_back(std::move(row));
    }
  } else {
    const GroupPtr g = dihedral_group(group.parameter);
    report.labels = dihedral_label_names(group.parameter);
    const auto coeffs = dihedral_custom_coeffs(g, module);
    for (int d = 0; d <= degree; ++d) {
      OracleCompareReport::Row row;
      row.d = d;
      row.walk = row_values(decompose_tensor_power_dihedral(g, coeffs, d));
      std::vector<double> residuals;
      row.oracle = row_values(dihedral_oracle_decompose(g, coeffs, d, &residuals));
      for (double r : residuals) {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), r == 0.0 ? "0" : "%.3g", r);
        row.residual.emplace_back(buffer);
      }
      if (row.walk != row.oracle) ++report.mismatches;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::vector<GridReport> run_tables(int max_n, int max_m, int degree, const std::string& which) {
  std::vector<GridReport> out;
  const auto want = [&](const std::string& name) { return which == "all" || which == name; };

  const auto sym_grid = [&](const std::string& name, SymModule module, bool free_gens) {
    GridReport grid;
    grid.name = name;
    grid.row_label = "n";
    for (int n = 2; n <= max_n; ++n) {
      const GroupPtr sym = symmetric_group(n);
      const TruncatedSeries s = free_gens ? free_generator_counts(sym, module, degree)
                                          : invariant_dimension_series(sym, module, degree);
      grid.rows.emplace_back(n, series_values(s));
    }
    return grid;
  };
  const auto dihedral_grid = [&](const std::string& name, bool free_gens) {
    GridReport grid;
    grid.name = name;
    grid.row_label = "m";
    for (int m = 3; m <= max_m; ++m) {
      const GroupPtr g = dihedral_group(m);
      const TruncatedSeries s = free_gens ? dihedral_free_generator_series(g, degree)
                                          : geometric_invariant_series(g, degree);
      grid.rows.emplace_back(m, series_values(s));
    }
    return grid;
  };

  if (want("sym-geometric-dims")) out.push_back(sym_grid("sym-geometric-dims", SymModule::geometric, false));
  if (want("sym-geometric-free")) out.push_back(sym_grid("sym-geometric-free", SymModule::geometric, true));
  if (want("sym-permutation-dims"))
    out.push_back(sym_grid("sym-permutation-dims", SymModule::permutation, false));
  if (want("sym-permutation-free"))
    out.push_back(sym_grid("sym-permutation-free", SymModule::permutation, true));
  if (want("dihedral-geometric-dims")) out.push_back(dihedral_grid("dihedral-geometric-dims", false));
  if (want("dihedral-geometric-free")) out.push_back(dihedral_grid("dihedral-geometric-free", true));
  if (out.empty()) throw CLI::ValidationError("--table", "unknown table name " + which);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposition of tensor powers into simple modules by Cayley-graph walk counting"};
  app.require_subcommand(1);

  CommonOptions decompose_opts, dims_opts, free_opts, conj_opts, oracle_opts;
  CommonOptions tables_opts;
  int tables_max_n = 8, tables_max_m = 12;
  std::string tables_which = "all";

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "multiplicities of simple modules in V^(tensor d), d = 0..D");
  add_common(cmd_decompose, decompose_opts);

  CLI::App* cmd_dims =
      app.add_subcommand("dims", "invariant dimension sequence dim (V^(tensor d))^G");
  add_common(cmd_dims, dims_opts);

  CLI::App* cmd_free = app.add_subcommand("free-gens", "free-generator counts of T(V)^G");
  add_common(cmd_free, free_opts);

  CLI::App* cmd_tables =
      app.add_subcommand("tables", "regenerate the dimension and free-generator tables");
  cmd_tables->add_option("--max-n", tables_max_n, "largest symmetric-group n (default 8)");
  cmd_tables->add_option("--max-m", tables_max_m, "largest dihedral m (default 12)");
  cmd_tables->add_option("--table", tables_which,
                         "one of sym-geometric-dims, sym-geometric-free, sym-permutation-dims, "
                         "sym-permutation-free, dihedral-geometric-dims, dihedral-geometric-free, "
                         "all");
  add_common(cmd_tables, tables_opts, /*with_module=*/false);
  tables_opts.degree = 10;

  CLI::App* cmd_conjecture = app.add_subcommand(
      "check-conjecture", "compare walk-computed geometric dimensions with the conjectured form");
  add_common(cmd_conjecture, conj_opts, /*with_module=*/false);
  conj_opts.degree = 12;

  CLI::App* cmd_oracle = app.add_subcommand(
      "oracle-compare", "walk-count decomposition vs character oracle; exit 1 on any mismatch");
  add_common(cmd_oracle, oracle_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_decompose->parsed()) {
      check_degree(decompose_opts.degree);
      const auto report = run_decompose(parse_group(decompose_opts.group),
                                        parse_module(decompose_opts.module), decompose_opts.degree);
      emit(decompose_opts, to_plain(report), to_csv(report), to_json(report));
    } else if (cmd_dims->parsed()) {
      check_degree(dims_opts.degree);
      const auto report =
          run_series(parse_group(dims_opts.group), parse_module(dims_opts.module), dims_opts.degree,
                     /*free_generators=*/false);
      emit(dims_opts, to_plain(report), to_csv(report), to_json(report));
    } else if (cmd_free->parsed()) {
      check_degree(free_opts.degree);
      const auto report =
          run_series(parse_group(free_opts.group), parse_module(free_opts.module), free_opts.degree,
                     /*free_generators=*/true);
      emit(free_opts, to_plain(report), to_csv(report), to_json(report));
    } else if (cmd_tables->parsed()) {
      check_degree(tables_opts.degree);
      if (tables_max_n > kMaxSymN)
        throw CLI::ValidationError("--max-n", "at most " + std::to_string(kMaxSymN));
      if (tables_max_m > kMaxDihedralM)
        throw CLI::ValidationError("--max-m", "at most " + std::to_string(kMaxDihedralM));
      const auto grids = run_tables(tables_max_n, tables_max_m, tables_opts.degree, tables_which);
      std::string plain, csv;
      nlohmann::json json = nlohmann::json::array();
      for (const auto& grid : grids) {
        plain += to_plain(grid) + "\n";
        csv += "# " + grid.name + "\n" + to_csv(grid);
        json.push_back(to_json(grid));
      }
      emit(tables_opts, plain, csv, json);
    } else if (cmd_conjecture->parsed()) {
      check_degree(conj_opts.degree);
      const GroupSpec group = parse_group(conj_opts.group);
      if (!group.symmetric)
        throw CLI::ValidationError("--group", "check-conjecture applies to sym groups");
      const ConjectureReport result = conjecture_check(group.parameter, conj_opts.degree);
      ConjectureEvidenceReport report;
      report.n = result.n;
      report.walk_values = series_values(result.walk_side);
      report.closed_form_values = series_values(result.closed_side);
      report.all_match = result.all_match;
      emit(conj_opts, to_plain(report), to_csv(report), to_json(report));
    } else if (cmd_oracle->parsed()) {
      check_degree(oracle_opts.degree);
      const auto report = run_oracle_compare(parse_group(oracle_opts.group),
                                             parse_module(oracle_opts.module), oracle_opts.degree);
      emit(oracle_opts, to_plain(report), to_csv(report), to_json(report));
      if (report.mismatches > 0) {
        std::cerr << "oracle-compare: " << report.mismatches << " mismatching degrees\n";
        return 1;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
