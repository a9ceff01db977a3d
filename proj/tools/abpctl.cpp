#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "abp/abp_io.hpp"
#include "abp/algebra.hpp"
#include "abp/applications.hpp"
#include "abp/catalog.hpp"
#include "suites.hpp"

using namespace abp;
using nlohmann::json;

namespace {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw DomainError("cannot write " + out);
  f << text;
}

std::string render(const Abp& b, const std::string& format) {
  if (format == "dot") return to_dot(b);
  return to_json(b).dump(2) + "\n";
}

std::vector<Scalar> parse_point(const std::string& text, std::size_t nvars, Field f, bool ones) {
  if (ones) return std::vector<Scalar>(nvars, f.one());
  std::vector<Scalar> p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(f.parse_scalar(item));
  if (p.size() != nvars) {
    throw DomainError("point has " + std::to_string(p.size()) + " values, ABP has " + std::to_string(nvars) + " variables");
  }
  return p;
}

Scalar json_scalar(const json& j, Field f) {
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw DomainError("matrix entries must be integers or strings");
}

// k x n grid of scalars, or of r x r matrices.
void run_matrix_verb(const std::string& path, Field f, bool signed_sum) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) throw DomainError("expected a k x n array");
  const std::size_t k = j.size();
  const std::size_t n = j[0].size();
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw DomainError("rows have different lengths");
  }
  if (!j[0][0].is_array()) {
    RectScalarMatrix a(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < n; ++c) a(i, c) = json_scalar(j[i][c], f);
    }
    std::cout << (signed_sum ? rdet_dp(a) : rper_dp(a)).to_string() << "\n";
    return;
  }
  const std::size_t r = j[0][0].size();
  const auto mr = matrix_algebra(r, f);
  std::vector<AlgebraElement> grid;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      const json& cell = j[i][c];
      if (!cell.is_array() || cell.size() != r) throw DomainError("every entry must be an r x r matrix");
      Matrix m(f, r, r);
      for (std::size_t a = 0; a < r; ++a) {
        if (!cell[a].is_array() || cell[a].size() != r) throw DomainError("every entry must be an r x r matrix");
        for (std::size_t b = 0; b < r; ++b) m(a, b) = json_scalar(cell[a][b], f);
      }
      grid.push_back(to_algebra_element(mr, m));
    }
  }
  const Matrix out = to_matrix(rper_algebra(grid, k, n, signed_sum));
  json rows = json::array();
  for (std::size_t a = 0; a < r; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < r; ++b) row.push_back(out(a, b).value_string());
    rows.push_back(row);
  }
  std::cout << rows.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build, expand and evaluate algebraic branching programs"};
  app.require_subcommand(1);

  std::string field_name = "rational";
  std::size_t n = 0, k = 0;
  std::string out, format = "json";

  auto* construct = app.add_subcommand("construct", "Build an ABP family and write it as JSON or DOT");
  std::string family;
  std::string graph_path;
  construct->add_option("family", family, "family name, or graph-poly / graph-split with --graph")->required();
  construct->add_option("--n", n, "number of variables / columns");
  construct->add_option("--k", k, "degree / rows");
  construct->add_option("--field", field_name, "rational or fp:<p>");
  construct->add_option("--graph", graph_path, "edge list for graph-poly");
  construct->add_option("--out", out, "output file (default stdout)");
  construct->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* expand_cmd = app.add_subcommand("expand", "Print the polynomial computed by an ABP");
  std::string abp_path;
  expand_cmd->add_option("abp", abp_path, "ABP JSON file")->required();
  expand_cmd->add_option("--out", out, "output file (default stdout)");
  std::size_t max_terms = kMaxTerms;
  expand_cmd->add_option("--max-terms", max_terms, "refuse expansions needing more term products per layer");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an ABP at a point");
  std::string point_text;
  bool ones = false;
  eval_cmd->add_option("abp", abp_path, "ABP JSON file")->required();
  auto* point_opt = eval_cmd->add_option("--point", point_text, "comma separated values");
  eval_cmd->add_flag("--ones", ones, "evaluate at all-ones")->excludes(point_opt);

  auto* had = app.add_subcommand("hadamard", "Hadamard product of two ABPs");
  std::string abp_path2;
  had->add_option("first", abp_path, "ABP JSON file")->required();
  had->add_option("second", abp_path2, "ABP JSON file")->required();
  had->add_option("--out", out, "output file (default stdout)");
  had->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* paths = app.add_subcommand("count-paths", "Count simple directed k-vertex paths");
  std::string method = "direct";
  paths->add_option("--graph", graph_path, "edge list, one \"u v\" per line, 1-indexed")->required();
  paths->add_option("--k", k, "path length in vertices")->required();
  paths->add_option("--method", method, "direct, rdet, transitions or enumerate")
      ->check(CLI::IsMember({"direct", "rdet", "transitions", "enumerate"}));

  std::string matrix_path;
  auto* rper_cmd = app.add_subcommand("rper", "Rectangular permanent of a JSON matrix");
  rper_cmd->add_option("matrix", matrix_path, "k x n JSON grid of scalars or r x r matrices")->required();
  rper_cmd->add_option("--field", field_name, "rational or fp:<p>");
  auto* rdet_cmd = app.add_subcommand("rdet", "Rectangular determinant of a JSON matrix");
  rdet_cmd->add_option("matrix", matrix_path, "k x n JSON grid of scalars or r x r matrices")->required();
  rdet_cmd->add_option("--field", field_name, "rational or fp:<p>");

  auto* verify = app.add_subcommand("verify", "Check constructions against brute-force expansions");
  std::string suite = "all";
  std::size_t max_n = 5, max_k = 3;
  verify->add_option("--suite", suite, "all or one suite name");
  verify->add_option("--max-n", max_n, "largest n");
  verify->add_option("--max-k", max_k, "largest k");

  auto* bench = app.add_subcommand("bench", "Time constructions and report time per node");
  std::vector<std::string> families{"s-star", "ncdet", "rdet", "rper-nc", "weak-s-star"};
  bench->add_option("--family", families, "families to time");
  bench->add_option("--max-n", max_n, "largest n");
  bench->add_option("--max-k", max_k, "largest k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Field field = Field::parse(field_name);
    if (*construct) {
      Abp b;
      if (family == "graph-poly" || family == "graph-split") {
        if (graph_path.empty()) throw DomainError(family + " needs --graph");
        if (k < 1) throw DomainError("need --k >= 1");
        const auto g = apps::load_edge_list(graph_path, n);
        b = family == "graph-poly" ? apps::graph_poly_abp(g, k) : apps::split_graph_abp(g, k);
      } else {
        b = build_family(family, n, k, field);
      }
      emit(render(b, format), out);
    } else if (*expand_cmd) {
      const Abp b = load_abp(abp_path);
      if (b.sources().size() == 1 && b.sinks().size() == 1) {
        emit(expand(b, max_terms).to_text(), out);
      } else {
        std::string text;
        for (NodeId src : b.sources()) {
          const auto polys = expand_sinks(b, src, max_terms);
          for (std::size_t i = 0; i < polys.size(); ++i) {
            text += "# source " + std::to_string(src) + " sink " + std::to_string(b.sinks()[i]);
            if (b.has_labels()) text += " " + b.label(b.num_layers() - 1, b.sinks()[i]);
            text += "\n" + polys[i].to_text();
          }
        }
        emit(text, out);
      }
    } else if (*eval_cmd) {
      const Abp b = load_abp(abp_path);
      if (point_text.empty() && !ones) throw DomainError("give --point or --ones");
      std::cout << eval_scalar(b, parse_point(point_text, b.nvars(), b.field(), ones)).to_string() << "\n";
    } else if (*had) {
      emit(render(hadamard_abp(load_abp(abp_path), load_abp(abp_path2)), format), out);
    } else if (*paths) {
      const auto g = apps::load_edge_list(graph_path);
      if (k < 1 || k > g.size()) throw DomainError("need 1 <= k <= number of vertices");
      std::uint64_t count = 0;
      if (method == "direct") count = apps::count_k_paths_direct(g, k);
      if (method == "rdet") count = apps::count_k_paths_via_rdet(g, k);
      if (method == "transitions") count = apps::count_k_paths_via_transitions(g, k);
      if (method == "enumerate") count = apps::enumerate_k_paths(g, k);
      std::cout << count << "\n";
    } else if (*rper_cmd || *rdet_cmd) {
      run_matrix_verb(matrix_path, field, static_cast<bool>(*rdet_cmd));
    } else if (*verify) {
      if (max_n < 1 || max_k < 1) throw DomainError("need --max-n and --max-k >= 1");
      bool ok = true;
      for (const auto& r : run_suites(suite, max_n, max_k)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.passed) std::cout << ": " << r.detail;
        std::cout << "\n";
        ok = ok && r.passed;
      }
      if (!ok) throw VerificationFailed("verification failed");
    } else if (*bench) {
      if (max_n < 1 || max_k < 1) throw DomainError("need --max-n and --max-k >= 1");
      std::cout << std::left << std::setw(14) << "family" << std::right << std::setw(4) << "n" << std::setw(4) << "k"
                << std::setw(10) << "nodes" << std::setw(10) << "edges" << std::setw(14) << "seconds"
                << std::setw(14) << "us/node" << "\n";
      for (const auto& fam : families) {
        for (std::size_t nn = 1; nn <= max_n; ++nn) {
          for (std::size_t kk = 1; kk <= std::min(nn, max_k); ++kk) {
            if (fam == "ncdet" && nn != kk) continue;
            const BenchRow row = bench_family(fam, nn, kk);
            std::cout << std::left << std::setw(14) << fam << std::right << std::setw(4) << nn << std::setw(4) << kk
                      << std::setw(10) << row.nodes << std::setw(10) << row.edges << std::setw(14) << std::scientific
                      << std::setprecision(3) << row.seconds << std::setw(14) << std::fixed << std::setprecision(3)
                      << row.per_node() * 1e6 << "\n";
          }
        }
      }
    }
  } catch (const VerificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
