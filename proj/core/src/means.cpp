#include "randic/means.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randic {

namespace {

constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-12;

double slack(double a, double b) noexcept {
  return std::max(kAbsTol, kRelTol * std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace

bool approx_le(double a, double b) noexcept { return a <= b + slack(a, b); }

bool approx_eq(double a, double b) noexcept {
  return std::fabs(a - b) <= slack(a, b);
}

PositiveValues::PositiveValues(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("value list must be nonempty");
  }
  for (double w : values_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("values must be finite and positive");
    }
  }
}

namespace detail {

double real_power(double base, double exponent) {
  double rounded = std::nearbyint(exponent);
  if (exponent == rounded && std::fabs(rounded) <= 32.0) {
    // Repeated multiplication keeps small integer exponents bit-exact.
    double result = 1.0;
    double factor = base;
    for (long e = std::labs(static_cast<long>(rounded)); e > 0; e >>= 1) {
      if (e & 1) result *= factor;
      factor *= factor;
    }
    return rounded < 0 ? 1.0 / result : result;
  }
  return std::exp(exponent * std::log(base));
}

double stable_power_sum(std::span<const double> values, double p) {
  if (p == 0.0) return static_cast<double>(values.size());
  std::vector<double> terms;
  terms.reserve(values.size());
  for (double w : values) terms.push_back(real_power(w, p));
  std::sort(terms.begin(), terms.end(), std::greater<double>());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

}  // namespace detail

double sum_power(const PositiveValues& v, double p) {
  return detail::stable_power_sum(v.values(), p);
}

double power_mean(const PositiveValues& v, double p) {
  const auto values = v.values();
  if (p == 0.0) {
    double log_sum = 0.0;
    for (double w : values) log_sum += std::log(w);
    return std::exp(log_sum / static_cast<double>(values.size()));
  }
  double mean_of_powers =
      detail::stable_power_sum(values, p) / static_cast<double>(values.size());
  return std::pow(mean_of_powers, 1.0 / p);
}

DerivedSumBound derive_sum_bound(int count, double p, const MeanBound& bound) {
  if (count < 1) throw std::domain_error("count must be >= 1");
  if (!(bound.value > 0.0)) throw std::domain_error("mean bound must be positive");
  if (p == 0.0) {
    throw std::domain_error("p = 0 is excluded: S_0 is the count");
  }
  if (bound.direction == Direction::upper && p > bound.exponent) {
    throw std::domain_error("an upper mean bound transfers only for p <= q");
  }
  if (bound.direction == Direction::lower && p < bound.exponent) {
    throw std::domain_error("a lower mean bound transfers only for p >= q");
  }
  DerivedSumBound out;
  out.exponent = p;
  out.count = count;
  out.value = count * detail::real_power(bound.value, p);
  const bool positive_p = p > 0.0;
  if (bound.direction == Direction::upper) {
    out.direction = positive_p ? Direction::upper : Direction::lower;
  } else {
    out.direction = positive_p ? Direction::lower : Direction::upper;
  }
  return out;
}

MonotonicityCheck check_monotonicity(const PositiveValues& v, double p,
                                     double q) {
  if (!(p < q)) throw std::domain_error("monotonicity check needs p < q");
  MonotonicityCheck out;
  out.holds = approx_le(power_mean(v, p), power_mean(v, q));
  auto [lo, hi] = std::minmax_element(v.values().begin(), v.values().end());
  out.all_equal = approx_eq(*lo, *hi);
  return out;
}

}  // namespace randic
