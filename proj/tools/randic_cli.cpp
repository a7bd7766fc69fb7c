/*
  randic — compute general Randic indices, verify the bound catalogue
  over graph corpora, run dominance studies, and dump the registry.

  Exit codes: 0 success / all bounds held, 1 violations or equality
  failures, 2 input error, 3 skipped checks under --strict.
*/
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "randic/bounds.hpp"
#include "randic/graph6.hpp"
#include "randic/indices.hpp"
#include "randic/verify.hpp"
#include "randic/version.hpp"

namespace {

struct CommonOptions {
  std::vector<std::string> families;
  std::string params;
  std::vector<std::string> inputs;
  std::vector<double> alphas = randic::default_alpha_grid();
  std::uint64_t seed = 0;
  int trials = 100;
  double tol = 1e-9;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::string format = "csv";
  std::string output;
  bool strict = false;
  long long clique_budget = 10'000'000;
  int chi_exact_limit = 16;
};

void add_corpus_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--family", opt.families,
                  "family descriptor, e.g. star:n=2..20 or gnp:n=4..12,p=0.3|0.5 "
                  "(repeatable)");
  cmd->add_option("--params", opt.params,
                  "parameters for a single --family given without inline params");
  cmd->add_option("--input", opt.inputs,
                  "graph6 file, one graph per line (repeatable)");
  cmd->add_option("--seed", opt.seed, "seed for random families");
  cmd->add_option("--trials", opt.trials, "samples per random family")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", opt.jobs, "worker threads (1 = single-threaded)");
  cmd->add_option("--clique-budget", opt.clique_budget,
                  "search-node budget for the exact clique number");
  cmd->add_option("--chi-exact-limit", opt.chi_exact_limit,
                  "largest order solved exactly for the chromatic number");
}

void add_output_options(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", opt.output, "write to file instead of stdout");
}

randic::SuiteConfig to_config(const CommonOptions& opt) {
  randic::SuiteConfig config;
  config.family_specs = opt.families;
  if (!opt.params.empty()) {
    if (config.family_specs.size() != 1 ||
        config.family_specs.front().find(':') != std::string::npos) {
      throw std::invalid_argument(
          "--params needs exactly one --family without inline parameters");
    }
    config.family_specs.front() += ":" + opt.params;
  }
  config.input_files = opt.inputs;
  config.alpha_grid = opt.alphas;
  config.tolerance = opt.tol;
  config.seed = opt.seed;
  config.trials = opt.trials;
  config.jobs = opt.jobs;
  config.strict = opt.strict;
  config.invariants.clique_budget.max_nodes = opt.clique_budget;
  config.invariants.chromatic.exact_max_vertices = opt.chi_exact_limit;
  config.invariants.chromatic.budget.max_nodes = opt.clique_budget;
  return config;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) {
    throw std::invalid_argument("cannot open output file '" + output + "'");
  }
  out << text;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int run_compute(const CommonOptions& opt) {
  auto config = to_config(opt);
  auto corpus = randic::build_corpus(config);

  const bool json = opt.format == "json";
  nlohmann::json json_rows = nlohmann::json::array();
  std::string csv = "graph,n,m,max_degree,min_degree,avg_degree,lambda,omega,"
                    "chi,chi_exact";
  for (double a : config.alpha_grid) csv += ",R[" + fmt(a) + "]";
  for (double a : config.alpha_grid) csv += ",Q[" + fmt(a) + "]";
  csv += '\n';

  for (const auto& entry : corpus) {
    auto inv = randic::compute_graph_invariants(entry.graph, config.invariants);
    const bool indices_ok = inv.degrees.min_degree >= 1;
    if (json) {
      nlohmann::json row;
      row["graph"] = entry.id;
      row["n"] = entry.graph.vertex_count();
      row["m"] = entry.graph.edge_count();
      row["max_degree"] = inv.degrees.max_degree;
      row["min_degree"] = inv.degrees.min_degree;
      row["avg_degree"] = inv.degrees.average_degree;
      if (inv.spectral.converged) row["lambda"] = inv.spectral.lambda;
      if (inv.clique) row["omega"] = *inv.clique;
      row["chi"] = inv.chromatic.value;
      row["chi_exact"] = inv.chromatic.exact;
      if (indices_ok) {
        for (double a : config.alpha_grid) {
          row["R"][fmt(a)] = randic::randic_index(entry.graph, a);
          row["Q"][fmt(a)] = randic::zeroth_randic_index(entry.graph, a);
        }
      }
      json_rows.push_back(std::move(row));
      continue;
    }
    csv += csv_field(entry.id);
    csv += ',' + std::to_string(entry.graph.vertex_count());
    csv += ',' + std::to_string(entry.graph.edge_count());
    csv += ',' + std::to_string(inv.degrees.max_degree);
    csv += ',' + std::to_string(inv.degrees.min_degree);
    csv += ',' + fmt(inv.degrees.average_degree);
    csv += ',';
    if (inv.spectral.converged) csv += fmt(inv.spectral.lambda);
    csv += ',';
    if (inv.clique) csv += std::to_string(*inv.clique);
    csv += ',' + std::to_string(inv.chromatic.value);
    csv += ',';
    csv += inv.chromatic.exact ? "1" : "0";
    for (double a : config.alpha_grid) {
      csv += ',';
      if (indices_ok) csv += fmt(randic::randic_index(entry.graph, a));
    }
    for (double a : config.alpha_grid) {
      csv += ',';
      if (indices_ok) csv += fmt(randic::zeroth_randic_index(entry.graph, a));
    }
    csv += '\n';
  }

  if (json) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["rows"] = std::move(json_rows);
    emit(doc.dump() + "\n", opt.output);
  } else {
    emit(csv, opt.output);
  }
  return 0;
}

int run_verify(const CommonOptions& opt,
               const std::vector<std::string>& bounds) {
  auto config = to_config(opt);
  config.bound_filter = bounds;
  auto corpus = randic::build_corpus(config);
  auto report = randic::run_verification(corpus, config);

  emit(opt.format == "json" ? randic::report_to_json(report)
                            : randic::report_to_csv(report),
       opt.output);

  const auto& s = report.summary;
  std::cerr << "checked " << s.checked << " rows over " << report.graph_count
            << " graphs: " << s.held << " held, " << s.violated
            << " violated, " << s.skipped << " skipped, "
            << s.equality_failures << " equality failures\n";
  return randic::report_exit_code(report, opt.strict);
}

int run_dominance(const CommonOptions& opt,
                  const std::vector<std::string>& pairs) {
  auto config = to_config(opt);
  auto corpus = randic::build_corpus(config);

  std::string csv_all;
  nlohmann::json json_all = nlohmann::json::array();
  for (const auto& pair : pairs) {
    auto comma = pair.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("--pair wants 'FIRST,SECOND'");
    }
    auto report = randic::run_dominance(corpus, pair.substr(0, comma),
                                        pair.substr(comma + 1), config);
    if (opt.format == "json") {
      json_all.push_back(nlohmann::json::parse(randic::dominance_to_json(report)));
    } else {
      csv_all += randic::dominance_to_csv(report);
    }
    std::cerr << report.first_id << " vs " << report.second_id << ": "
              << report.first_tighter << " first tighter, "
              << report.second_tighter << " second tighter, " << report.ties
              << " ties\n";
  }
  emit(opt.format == "json" ? json_all.dump() + "\n" : csv_all, opt.output);
  return 0;
}

int run_registry(const CommonOptions& opt) {
  emit(opt.format == "json" ? randic::registry_to_json()
                            : randic::registry_to_csv(),
       opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general Randic indices, spectral/degree bounds, and a "
               "machine-checked inequality catalogue"};
  app.set_version_flag("--version", std::string(randic::kVersion));
  app.require_subcommand(1);

  CommonOptions opt;
  std::vector<std::string> bounds;
  std::vector<std::string> pairs;

  auto* compute = app.add_subcommand(
      "compute", "invariant and index table for a corpus");
  add_corpus_options(compute, opt);
  add_output_options(compute, opt);
  compute->add_option("--alpha", opt.alphas, "alpha grid")->delimiter(',');

  auto* verify = app.add_subcommand(
      "verify", "evaluate the bound catalogue over a corpus");
  add_corpus_options(verify, opt);
  add_output_options(verify, opt);
  verify->add_option("--alpha", opt.alphas, "alpha grid")->delimiter(',');
  verify->add_option("--tol", opt.tol, "comparison slack factor");
  verify->add_option("--bounds", bounds, "restrict to these bound ids")
      ->delimiter(',');
  verify->add_flag("--strict", opt.strict,
                   "exit 3 when any check was skipped");

  auto* dominance = app.add_subcommand(
      "dominance", "compare right-hand sides of two bounds");
  add_corpus_options(dominance, opt);
  add_output_options(dominance, opt);
  dominance->add_option("--alpha", opt.alphas, "alpha grid")->delimiter(',');
  dominance->add_option("--tol", opt.tol, "tie tolerance");
  dominance->add_option("--pair", pairs, "bound id pair 'FIRST,SECOND'")
      ->required();

  auto* registry = app.add_subcommand(
      "registry", "dump the bound catalogue");
  add_output_options(registry, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(opt);
    if (verify->parsed()) return run_verify(opt, bounds);
    if (dominance->parsed()) return run_dominance(opt, pairs);
    if (registry->parsed()) return run_registry(opt);
  } catch (const randic::Graph6Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
