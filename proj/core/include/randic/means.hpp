/*
  Power sums S_p, generalized means M_p (with M_0 the geometric mean),
  the monotonicity check, and the transfer of a mean bound into a power
  sum bound. All functions are pure and thread safe.
*/
#pragma once

#include <span>
#include <vector>

namespace randic {

enum class Direction { lower, upper };

// A nonempty list of strictly positive finite reals.
class PositiveValues {
 public:
  explicit PositiveValues(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  int count() const noexcept { return static_cast<int>(values_.size()); }

 private:
  std::vector<double> values_;
};

// S_p = sum w_i^p; S_0 is the count, consistent with n * M_p^p = S_p.
// Terms are accumulated in descending order so results are reproducible.
double sum_power(const PositiveValues& v, double p);

// M_p = ((1/n) S_p)^(1/p) for p != 0; M_0 is the geometric mean,
// computed in log space.
double power_mean(const PositiveValues& v, double p);

struct MeanBound {
  double exponent = 0.0;  // the q of M_q
  Direction direction = Direction::upper;
  double value = 0.0;     // must be positive
};

struct DerivedSumBound {
  double exponent = 0.0;  // the p of S_p
  Direction direction = Direction::lower;
  double value = 0.0;
  int count = 0;          // the n used
};

// Transfers a bound on M_q to a bound on S_p via the power mean
// inequality and n * M_p^p = S_p:
//   upper U at q, p <= q:  S_p <= n U^p for p > 0,  S_p >= n U^p for p < 0
//   lower L at q, p >= q:  S_p >= n L^p for p > 0,  S_p <= n L^p for p < 0
// Throws std::domain_error when p sits on the wrong side of q for the
// given direction, or when p == 0 (both conclusions degenerate there).
DerivedSumBound derive_sum_bound(int count, double p, const MeanBound& bound);

struct MonotonicityCheck {
  bool holds = false;
  bool all_equal = false;  // the equality case w_1 = ... = w_n
};

// Checks M_p <= M_q for p < q, within tolerance.
MonotonicityCheck check_monotonicity(const PositiveValues& v, double p,
                                     double q);

// Symmetric approximate comparisons: relative 1e-9, absolute floor 1e-12.
bool approx_le(double a, double b) noexcept;
bool approx_eq(double a, double b) noexcept;

namespace detail {

// Shared kernel: powers of the inputs, sorted descending, then summed.
// randic_index / zeroth_randic_index use the same path so the identity
// with sum_power is exact.
double stable_power_sum(std::span<const double> values, double p);
double real_power(double base, double exponent);

}  // namespace detail

}  // namespace randic
