/*
  Verification suite: corpus assembly from family descriptors and graph6
  files, batch evaluation of the bound registry over an alpha grid, and
  report serialisation (CSV / versioned JSON).

  Graphs are distributed over worker threads as independent per-graph
  tasks pulled from a shared counter; each task computes the expensive
  invariants once and evaluates every bound. Results are merged in corpus
  order, so output is byte-identical at any parallelism degree.
*/
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "randic/bounds.hpp"
#include "randic/families.hpp"

namespace randic {

std::vector<double> default_alpha_grid();  // {-2,-1,-0.5,-0.25,0.25,0.5,1}

struct SuiteConfig {
  std::vector<std::string> family_specs;  // e.g. "star:n=2..20"
  std::vector<std::string> input_files;   // graph6, one per line
  std::vector<double> alpha_grid = default_alpha_grid();
  double tolerance = 1e-9;  // slack factor for bound comparisons
  std::uint64_t seed = 0;
  int trials = 100;  // samples per random family
  std::vector<std::string> bound_filter;  // empty = whole registry
  int jobs = 1;
  bool strict = false;
  InvariantOptions invariants{};
};

struct VerificationSummary {
  std::size_t rows = 0;
  std::size_t checked = 0;  // applicable and not skipped
  std::size_t held = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  std::size_t inapplicable = 0;
  std::size_t equalities_predicted = 0;
  std::size_t equalities_observed = 0;
  std::size_t equality_failures = 0;  // predicted but not observed
};

struct VerificationReport {
  std::vector<BoundResult> results;  // ordered by (graph, bound, alpha)
  VerificationSummary summary;
  std::size_t graph_count = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> sources;
  std::string version;
};

// Expands family descriptors and reads input files. Throws
// std::invalid_argument / Graph6Error on bad input.
std::vector<NamedGraph> build_corpus(const SuiteConfig& config);

VerificationReport run_verification(const std::vector<NamedGraph>& corpus,
                                    const SuiteConfig& config);

// 0 all held, 1 violations or equality-prediction failures, 3 skipped
// rows under strict mode.
int report_exit_code(const VerificationReport& report, bool strict);

std::string report_to_json(const VerificationReport& report,
                           bool include_timestamp = true);
std::string report_to_csv(const VerificationReport& report);

std::string registry_to_json();
std::string registry_to_csv();

struct DominanceRow {
  std::string graph_id;
  std::optional<double> alpha;
  DominanceResult comparison;
};

struct DominanceReport {
  std::string first_id;
  std::string second_id;
  std::vector<DominanceRow> rows;
  std::size_t first_tighter = 0;
  std::size_t second_tighter = 0;
  std::size_t ties = 0;
  std::size_t skipped = 0;  // combinations with unavailable invariants
};

// Compares two same-direction bounds across the corpus on every grid
// alpha where both apply (once for pinned-alpha pairs). Throws
// std::invalid_argument for mixed directions/targets.
DominanceReport run_dominance(const std::vector<NamedGraph>& corpus,
                              const std::string& first_id,
                              const std::string& second_id,
                              const SuiteConfig& config);

std::string dominance_to_csv(const DominanceReport& report);
std::string dominance_to_json(const DominanceReport& report);

}  // namespace randic
