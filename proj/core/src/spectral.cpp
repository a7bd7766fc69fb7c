#include "randic/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace randic {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(2.0 * sum);
}

// One cyclic Jacobi sweep over all (p, q) pairs, rotating the pair away
// and accumulating the rotations into v.
void jacobi_sweep(std::vector<double>& a, std::vector<double>& v, int n) {
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      double apq = a[p * n + q];
      if (apq == 0.0) continue;
      double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
      double t = (theta >= 0 ? 1.0 : -1.0) /
                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      for (int k = 0; k < n; ++k) {
        double akp = a[k * n + p];
        double akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
      }
      for (int k = 0; k < n; ++k) {
        double apk = a[p * n + k];
        double aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
      }
      for (int k = 0; k < n; ++k) {
        double vkp = v[k * n + p];
        double vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
      }
    }
  }
}

void multiply_adjacency(const Graph& g, const std::vector<double>& x,
                        std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& [u, v] : g.edges()) {
    y[u] += x[v];
    y[v] += x[u];
  }
}

SpectralResult dense_path(const Graph& g, const SpectralOptions& opts) {
  const int n = g.vertex_count();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    a[u * n + v] = 1.0;
    a[v * n + u] = 1.0;
  }
  std::vector<double> vec(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vec[i * n + i] = 1.0;

  SpectralResult result;
  result.method = SpectralMethod::dense;
  const double stop = std::max(opts.tolerance * 1e-2, 1e-15) * std::max(1, n);
  constexpr int kMaxSweeps = 100;
  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm(a, n) > stop) {
    jacobi_sweep(a, vec, n);
    ++sweeps;
  }
  result.iterations = sweeps;

  int best = 0;
  for (int i = 1; i < n; ++i)
    if (a[i * n + i] > a[best * n + best]) best = i;
  result.lambda = a[best * n + best];

  std::vector<double> x(n), ax(n);
  for (int i = 0; i < n; ++i) x[i] = vec[i * n + best];
  multiply_adjacency(g, x, ax);
  double residual = 0.0;
  for (int i = 0; i < n; ++i)
    residual = std::max(residual, std::fabs(ax[i] - result.lambda * x[i]));
  result.residual = residual;
  result.converged = residual <= opts.tolerance;
  return result;
}

SpectralResult iterative_path(const Graph& g, const SpectralOptions& opts) {
  const int n = g.vertex_count();
  const double shift = *std::max_element(g.degrees_by_vertex().begin(),
                                         g.degrees_by_vertex().end());
  SpectralResult result;
  result.method = SpectralMethod::iterative;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n), bx(n);
  double mu = 0.0;
  double residual = 0.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    multiply_adjacency(g, x, ax);
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      bx[i] = ax[i] + shift * x[i];
      norm += bx[i] * bx[i];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) x[i] = bx[i] / norm;

    multiply_adjacency(g, x, ax);
    mu = 0.0;
    for (int i = 0; i < n; ++i) mu += x[i] * (ax[i] + shift * x[i]);
    residual = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual,
                          std::fabs(ax[i] + shift * x[i] - mu * x[i]));
    }
    result.iterations = it;
    if (residual <= opts.tolerance) {
      result.converged = true;
      break;
    }
  }
  // (A + shift I) v - mu v == A v - (mu - shift) v, so the residual for
  // the shifted problem is the residual for A as well.
  result.lambda = mu - shift;
  result.residual = residual;
  return result;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    SpectralResult r;
    r.converged = true;
    r.method = n <= opts.dense_cutoff ? SpectralMethod::dense
                                      : SpectralMethod::iterative;
    return r;
  }
  SpectralResult result = n <= opts.dense_cutoff ? dense_path(g, opts)
                                                 : iterative_path(g, opts);
  const auto& degs = g.degrees_by_vertex();
  const int min_degree = *std::min_element(degs.begin(), degs.end());
  if (result.converged && min_degree >= 1) {
    const int max_degree = *std::max_element(degs.begin(), degs.end());
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / n;
    const double tol = std::max(opts.tolerance, 1e-9);
    if (result.lambda < avg - tol || result.lambda > max_degree + tol) {
      result.converged = false;  // estimate escaped the Perron sandwich
    }
  }
  return result;
}

double hong_bound(const Graph& g) {
  const auto& degs = g.degrees_by_vertex();
  if (*std::min_element(degs.begin(), degs.end()) < 1) {
    throw std::domain_error("bound needs minimum degree >= 1");
  }
  return std::sqrt(static_cast<double>(2 * g.edge_count() -
                                       g.vertex_count() + 1));
}

double nikiforov_bound(const Graph& g, int omega) {
  if (g.edge_count() < 1) throw std::domain_error("bound needs an edge");
  if (omega < 2) {
    throw std::domain_error("clique number must be >= 2 for this bound");
  }
  const double m = static_cast<double>(g.edge_count());
  return std::sqrt(2.0 * m * (omega - 1) / omega);
}

}  // namespace randic
