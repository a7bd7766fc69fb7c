#include "randic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "randic/graph6.hpp"
#include "randic/version.hpp"

namespace randic {

namespace {

std::string fmt_double(double v, const char* spec = "%.12g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

const char* tightness_name(Tightness t) {
  switch (t) {
    case Tightness::first:
      return "first";
    case Tightness::second:
      return "second";
    case Tightness::tie:
      return "tie";
  }
  return "tie";
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::vector<const BoundSpec*> select_bounds(
    const std::vector<std::string>& filter) {
  std::vector<const BoundSpec*> specs;
  if (filter.empty()) {
    for (const auto& s : bound_registry()) specs.push_back(&s);
    return specs;
  }
  for (const auto& id : filter) specs.push_back(&find_bound(id));
  return specs;
}

// All rows for one graph, in registry order; interval-domain bounds run
// once per grid alpha, pinned and alpha-free bounds run once.
std::vector<BoundResult> evaluate_graph(const NamedGraph& entry,
                                        const std::vector<const BoundSpec*>& specs,
                                        const SuiteConfig& config) {
  GraphInvariants inv = compute_graph_invariants(entry.graph, config.invariants);
  EvalContext ctx(entry.graph, inv);
  std::vector<BoundResult> rows;
  for (const BoundSpec* spec : specs) {
    if (spec->alpha_domain.kind() == AlphaDomain::Kind::intervals) {
      for (double alpha : config.alpha_grid) {
        BoundResult r = evaluate_bound(*spec, ctx, alpha, config.tolerance);
        r.graph_id = entry.id;
        rows.push_back(std::move(r));
      }
    } else {
      BoundResult r = evaluate_bound(*spec, ctx, std::nullopt, config.tolerance);
      r.graph_id = entry.id;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

nlohmann::json result_to_json(const BoundResult& r) {
  nlohmann::json row;
  row["graph"] = r.graph_id;
  row["bound"] = r.bound_id;
  if (r.alpha) {
    row["alpha"] = *r.alpha;
  } else {
    row["alpha"] = nullptr;
  }
  row["applicable"] = r.applicable;
  if (!r.applicable) return row;
  if (r.skipped) {
    row["skipped"] = true;
    row["skip_reason"] = r.skip_reason;
    return row;
  }
  row["lhs"] = r.lhs;
  row["rhs"] = r.rhs;
  row["holds"] = r.holds;
  row["abs_gap"] = r.abs_gap;
  row["rel_gap"] = r.rel_gap;
  row["equality_observed"] = r.equality_observed;
  row["equality_predicted"] = r.equality_predicted;
  return row;
}

}  // namespace

std::vector<double> default_alpha_grid() {
  return {-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0};
}

std::vector<NamedGraph> build_corpus(const SuiteConfig& config) {
  std::vector<NamedGraph> corpus;
  for (const auto& text : config.family_specs) {
    FamilySpec spec = parse_family_spec(text);
    auto graphs = expand_family(spec, config.seed, config.trials);
    for (auto& g : graphs) corpus.push_back(std::move(g));
  }
  for (const auto& path : config.input_files) {
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("cannot open input file '" + path + "'");
    }
    for (auto& line : read_graph6_lines(in)) {
      corpus.push_back(
          {path + ":" + std::to_string(line.line_number), std::move(line.graph)});
    }
  }
  if (corpus.empty()) {
    throw std::invalid_argument("no graphs: give --family and/or --input");
  }
  return corpus;
}

VerificationReport run_verification(const std::vector<NamedGraph>& corpus,
                                    const SuiteConfig& config) {
  if (config.alpha_grid.empty()) {
    throw std::invalid_argument("alpha grid must be nonempty");
  }
  const auto specs = select_bounds(config.bound_filter);

  std::vector<std::vector<BoundResult>> per_graph(corpus.size());
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1 || corpus.size() <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      per_graph[i] = evaluate_graph(corpus[i], specs, config);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) break;
        per_graph[i] = evaluate_graph(corpus[i], specs, config);
      }
    };
    std::vector<std::thread> pool;
    const int spawn = std::min<std::size_t>(jobs, corpus.size());
    pool.reserve(spawn);
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.graph_count = corpus.size();
  report.seed = config.seed;
  report.trials = config.trials;
  report.version = std::string(kVersion);
  report.sources = config.family_specs;
  for (const auto& f : config.input_files) report.sources.push_back(f);

  for (auto& rows : per_graph) {
    for (auto& r : rows) {
      auto& s = report.summary;
      ++s.rows;
      if (!r.applicable) {
        ++s.inapplicable;
      } else if (r.skipped) {
        ++s.skipped;
      } else {
        ++s.checked;
        if (r.holds) {
          ++s.held;
        } else {
          ++s.violated;
        }
        if (r.equality_predicted) {
          ++s.equalities_predicted;
          if (!r.equality_observed) ++s.equality_failures;
        }
        if (r.equality_observed) ++s.equalities_observed;
      }
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

int report_exit_code(const VerificationReport& report, bool strict) {
  if (report.summary.violated > 0 || report.summary.equality_failures > 0) {
    return 1;
  }
  if (strict && report.summary.skipped > 0) return 3;
  return 0;
}

std::string report_to_json(const VerificationReport& report,
                           bool include_timestamp) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["tool"] = "randic";
  doc["version"] = report.version;
  if (include_timestamp) doc["timestamp"] = iso_timestamp();
  doc["corpus"] = {{"graphs", report.graph_count},
                   {"seed", report.seed},
                   {"trials", report.trials},
                   {"sources", report.sources}};
  doc["summary"] = {{"rows", report.summary.rows},
                    {"checked", report.summary.checked},
                    {"held", report.summary.held},
                    {"violated", report.summary.violated},
                    {"skipped", report.summary.skipped},
                    {"inapplicable", report.summary.inapplicable},
                    {"equalities_predicted", report.summary.equalities_predicted},
                    {"equalities_observed", report.summary.equalities_observed},
                    {"equality_failures", report.summary.equality_failures}};
  auto rows = nlohmann::json::array();
  for (const auto& r : report.results) rows.push_back(result_to_json(r));
  doc["results"] = std::move(rows);
  return doc.dump();
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out =
      "graph,bound,alpha,applicable,skipped,skip_reason,lhs,rhs,holds,"
      "abs_gap,rel_gap,equality_observed,equality_predicted\n";
  for (const auto& r : report.results) {
    out += csv_escape(r.graph_id);
    out += ',';
    out += r.bound_id;
    out += ',';
    if (r.alpha) out += fmt_double(*r.alpha, "%g");
    out += ',';
    out += r.applicable ? "1" : "0";
    out += ',';
    out += r.skipped ? "1" : "0";
    out += ',';
    out += csv_escape(r.skip_reason);
    if (r.applicable && !r.skipped) {
      out += ',';
      out += fmt_double(r.lhs);
      out += ',';
      out += fmt_double(r.rhs);
      out += ',';
      out += r.holds ? "1" : "0";
      out += ',';
      out += fmt_double(r.abs_gap);
      out += ',';
      out += fmt_double(r.rel_gap);
      out += ',';
      out += r.equality_observed ? "1" : "0";
      out += ',';
      out += r.equality_predicted ? "1" : "0";
    } else {
      out += ",,,,,,,";
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::json registry_entry_json(const BoundSpec& s) {
  nlohmann::json row;
  row["id"] = s.id;
  row["statement"] = s.statement;
  switch (s.target) {
    case BoundTarget::randic_index:
      row["target"] = "R";
      break;
    case BoundTarget::zeroth_index:
      row["target"] = "Q";
      break;
    case BoundTarget::scalar:
      row["target"] = "scalar";
      break;
  }
  row["direction"] = s.direction == Direction::lower ? "lower" : "upper";
  row["alpha_domain"] = s.alpha_domain.to_string();
  row["predicate"] = s.predicate_name;
  row["equality"] = s.equality_name;
  if (s.anchor) {
    row["anchor"] = {{"exponent", s.anchor->exponent},
                     {"side", s.anchor->side == Direction::lower ? "lower"
                                                                 : "upper"},
                     {"expression", s.anchor->expression}};
  }
  row["source"] = s.source;
  return row;
}

}  // namespace

std::string registry_to_json() {
  nlohmann::json doc;
  doc["schema"] = 1;
  auto rows = nlohmann::json::array();
  for (const auto& s : bound_registry()) rows.push_back(registry_entry_json(s));
  doc["bounds"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string registry_to_csv() {
  std::string out =
      "id,target,direction,alpha_domain,predicate,equality,anchor_exponent,"
      "anchor_side,anchor_expression,statement,source\n";
  for (const auto& s : bound_registry()) {
    out += s.id;
    out += ',';
    out += s.target == BoundTarget::randic_index   ? "R"
           : s.target == BoundTarget::zeroth_index ? "Q"
                                                   : "scalar";
    out += ',';
    out += s.direction == Direction::lower ? "lower" : "upper";
    out += ',';
    out += csv_escape(s.alpha_domain.to_string());
    out += ',';
    out += s.predicate_name;
    out += ',';
    out += s.equality_name;
    out += ',';
    if (s.anchor) {
      out += fmt_double(s.anchor->exponent, "%g");
      out += ',';
      out += s.anchor->side == Direction::lower ? "lower" : "upper";
      out += ',';
      out += csv_escape(s.anchor->expression);
    } else {
      out += ",,";
    }
    out += ',';
    out += csv_escape(s.statement);
    out += ',';
    out += csv_escape(s.source);
    out += '\n';
  }
  return out;
}

DominanceReport run_dominance(const std::vector<NamedGraph>& corpus,
                              const std::string& first_id,
                              const std::string& second_id,
                              const SuiteConfig& config) {
  const BoundSpec& first = find_bound(first_id);
  const BoundSpec& second = find_bound(second_id);
  if (first.target != second.target || first.direction != second.direction ||
      first.target == BoundTarget::scalar) {
    throw std::invalid_argument(
        "dominance pair must share target and direction");
  }

  // Pinned bounds compare once at their alpha; interval pairs compare on
  // every grid alpha both domains contain.
  std::vector<std::optional<double>> alphas;
  if (first.alpha_domain.kind() == AlphaDomain::Kind::fixed &&
      second.alpha_domain.kind() == AlphaDomain::Kind::fixed) {
    if (first.alpha_domain.fixed_value() != second.alpha_domain.fixed_value()) {
      throw std::invalid_argument("pinned bounds sit at different alphas");
    }
    alphas.push_back(first.alpha_domain.fixed_value());
  } else {
    for (double a : config.alpha_grid) {
      if (first.alpha_domain.contains(a) && second.alpha_domain.contains(a)) {
        alphas.push_back(a);
      }
    }
    if (alphas.empty()) {
      throw std::invalid_argument(
          "no grid alpha lies in both bound domains");
    }
  }

  DominanceReport report;
  report.first_id = first_id;
  report.second_id = second_id;
  for (const auto& entry : corpus) {
    GraphInvariants inv = compute_graph_invariants(entry.graph, config.invariants);
    EvalContext ctx(entry.graph, inv);
    for (const auto& alpha : alphas) {
      if (!first.predicate(ctx) || !second.predicate(ctx)) continue;
      const bool lambda_missing = (first.needs_lambda || second.needs_lambda) &&
                                  !ctx.lambda_available();
      const bool omega_missing = (first.needs_omega || second.needs_omega) &&
                                 !ctx.omega_available();
      if (lambda_missing || omega_missing) {
        ++report.skipped;
        continue;
      }
      DominanceRow row;
      row.graph_id = entry.id;
      row.alpha = alpha;
      row.comparison =
          dominance_check(first, second, ctx, *alpha, config.tolerance);
      switch (row.comparison.tighter) {
        case Tightness::first:
          ++report.first_tighter;
          break;
        case Tightness::second:
          ++report.second_tighter;
          break;
        case Tightness::tie:
          ++report.ties;
          break;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string dominance_to_csv(const DominanceReport& report) {
  std::string out = "graph,alpha,first,second,first_rhs,second_rhs,tighter\n";
  for (const auto& row : report.rows) {
    out += csv_escape(row.graph_id);
    out += ',';
    if (row.alpha) out += fmt_double(*row.alpha, "%g");
    out += ',';
    out += report.first_id;
    out += ',';
    out += report.second_id;
    out += ',';
    out += fmt_double(row.comparison.first_rhs);
    out += ',';
    out += fmt_double(row.comparison.second_rhs);
    out += ',';
    out += tightness_name(row.comparison.tighter);
    out += '\n';
  }
  return out;
}

std::string dominance_to_json(const DominanceReport& report) {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["first"] = report.first_id;
  doc["second"] = report.second_id;
  doc["summary"] = {{"first_tighter", report.first_tighter},
                    {"second_tighter", report.second_tighter},
                    {"ties", report.ties},
                    {"skipped", report.skipped}};
  auto rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json r;
    r["graph"] = row.graph_id;
    if (row.alpha) {
      r["alpha"] = *row.alpha;
    } else {
      r["alpha"] = nullptr;
    }
    r["first_rhs"] = row.comparison.first_rhs;
    r["second_rhs"] = row.comparison.second_rhs;
    r["tighter"] = tightness_name(row.comparison.tighter);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

}  // namespace randic
