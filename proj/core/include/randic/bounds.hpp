/*
  Declarative catalogue of index and spectral inequalities: per-bound
  applicability predicates, right-hand sides, equality classes and source
  attributions, plus the evaluator and pairwise dominance comparison.

  The registry is immutable after construction; evaluation is pure per
  (graph, bound, alpha) and may run on any number of threads.
*/
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "randic/combinatorial.hpp"
#include "randic/graph.hpp"
#include "randic/means.hpp"
#include "randic/spectral.hpp"

namespace randic {

struct AlphaInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double a) const noexcept;
};

// Where a bound lives on the alpha axis: an interval (possibly a union
// of two), a single pinned alpha, or nothing at all for scalar facts.
class AlphaDomain {
 public:
  enum class Kind { none, fixed, intervals };

  static AlphaDomain none();
  static AlphaDomain fixed(double alpha);
  static AlphaDomain interval(double lo, bool lo_open, double hi, bool hi_open);
  static AlphaDomain union_of(const AlphaInterval& a, const AlphaInterval& b);

  Kind kind() const noexcept { return kind_; }
  double fixed_value() const;
  bool contains(double alpha) const noexcept;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::none;
  double fixed_ = 0.0;
  std::vector<AlphaInterval> intervals_;
};

struct GraphInvariants {
  DegreeStats degrees;
  GraphClassFlags flags;
  SpectralResult spectral;
  std::optional<int> clique;
  ChromaticResult chromatic;
};

struct InvariantOptions {
  SpectralOptions spectral{};
  SearchBudget clique_budget{};
  ChromaticOptions chromatic{};
};

GraphInvariants compute_graph_invariants(const Graph& g,
                                         const InvariantOptions& opts = {});

// Per-graph evaluation context: the graph, its invariants, and memoised
// index values. One context serves one evaluation task; the memo is not
// synchronised.
class EvalContext {
 public:
  EvalContext(const Graph& g, const GraphInvariants& inv)
      : graph_(&g), inv_(&inv) {}

  const Graph& graph() const noexcept { return *graph_; }
  const GraphInvariants& invariants() const noexcept { return *inv_; }

  double n() const noexcept { return graph_->vertex_count(); }
  double m() const noexcept { return static_cast<double>(graph_->edge_count()); }
  double max_degree() const noexcept { return inv_->degrees.max_degree; }
  double min_degree() const noexcept { return inv_->degrees.min_degree; }
  double avg_degree() const noexcept { return inv_->degrees.average_degree; }

  bool lambda_available() const noexcept { return inv_->spectral.converged; }
  double lambda() const noexcept { return inv_->spectral.lambda; }
  bool omega_available() const noexcept { return inv_->clique.has_value(); }
  int omega() const noexcept { return *inv_->clique; }
  int chromatic() const noexcept { return inv_->chromatic.value; }
  bool chromatic_exact() const noexcept { return inv_->chromatic.exact; }

  double randic(double alpha) const;
  double zeroth(double alpha) const;
  double edge_products_geometric_mean() const;

 private:
  const Graph* graph_;
  const GraphInvariants* inv_;
  mutable std::map<double, double> randic_memo_;
  mutable std::map<double, double> zeroth_memo_;
  mutable std::optional<double> geomean_memo_;
};

enum class BoundTarget { randic_index, zeroth_index, scalar };

struct BoundLink {
  double lhs = 0.0;
  double rhs = 0.0;
  bool uses_chromatic = false;
};

// The power-mean anchor a bound was derived through, when there is one.
struct PowerMeanAnchor {
  double exponent = 0.0;
  Direction side = Direction::upper;
  std::string expression;
};

struct BoundSpec {
  std::string id;
  std::string statement;  // human-readable inequality
  BoundTarget target = BoundTarget::scalar;
  Direction direction = Direction::lower;
  AlphaDomain alpha_domain;
  std::string predicate_name;  // delta>=1 | tree | chemical-and-not-K5 | any
  std::function<bool(const EvalContext&)> predicate;
  bool needs_lambda = false;
  bool needs_omega = false;
  bool needs_chromatic = false;
  // Link values at (graph, alpha); a violated link whose uses_chromatic
  // flag is set while the chromatic number is inexact yields a skip.
  std::function<std::vector<BoundLink>(const EvalContext&, double alpha)> links;
  std::string equality_name;  // empty when no equality class is recorded
  std::function<bool(const EvalContext&)> equality;
  std::optional<PowerMeanAnchor> anchor;
  std::string source;
};

const std::vector<BoundSpec>& bound_registry();
const BoundSpec& find_bound(std::string_view id);  // throws std::invalid_argument

struct BoundResult {
  std::string bound_id;
  std::string graph_id;
  std::optional<double> alpha;
  bool applicable = false;
  bool skipped = false;
  std::string skip_reason;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double abs_gap = 0.0;
  double rel_gap = 0.0;
  bool equality_observed = false;
  bool equality_predicted = false;
};

// Evaluates one bound on one graph. `alpha` must be supplied for
// interval-domain bounds; fixed-alpha bounds accept either their pinned
// value or nullopt; alpha-free bounds ignore it. Numerical slack is
// slack_factor * max(1, |lhs|, |rhs|) per link.
BoundResult evaluate_bound(const BoundSpec& spec, const EvalContext& ctx,
                           std::optional<double> alpha,
                           double slack_factor = 1e-9);

// The equality-class predicate on its own.
bool predict_equality(const BoundSpec& spec, const EvalContext& ctx);

enum class Tightness { first, second, tie };

struct DominanceResult {
  std::string first_id;
  std::string second_id;
  double first_rhs = 0.0;
  double second_rhs = 0.0;
  Tightness tighter = Tightness::tie;
  double gap = 0.0;
};

// Compares the right-hand sides of two same-direction, same-target
// bounds at (graph, alpha): for lower bounds the larger RHS is tighter.
// Throws std::invalid_argument on mixed directions/targets or when a
// bound is inapplicable at (graph, alpha).
DominanceResult dominance_check(const BoundSpec& first, const BoundSpec& second,
                                const EvalContext& ctx, double alpha,
                                double slack_factor = 1e-9);

}  // namespace randic
