/*
  Spectral radius of the adjacency matrix with a verifiable residual.

  Small graphs go through a cyclic Jacobi eigensolver; larger ones use
  power iteration on A + max_degree*I with a strictly positive start
  vector (the shift makes the Perron eigenvalue strictly dominant, also
  for bipartite graphs), subtracting the shift at the end.
*/
#pragma once

#include "randic/graph.hpp"

namespace randic {

enum class SpectralMethod { dense, iterative };

struct SpectralOptions {
  double tolerance = 1e-10;
  int dense_cutoff = 64;      // Jacobi at or below this order
  int max_iterations = 100000;
};

struct SpectralResult {
  double lambda = 0.0;
  double residual = 0.0;  // ||A v - lambda v||_inf for the estimate v
  SpectralMethod method = SpectralMethod::dense;
  int iterations = 0;     // Jacobi sweeps or power steps
  bool converged = false;
};

// Largest adjacency eigenvalue within opts.tolerance. On failure to
// converge the best estimate is returned with converged = false; callers
// must treat that as unavailable. For graphs with min degree >= 1 the
// Perron sandwich 2m/n <= lambda <= max degree is verified internally.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});

// sqrt(2m - n + 1), an upper bound for lambda on graphs with no isolated
// vertices (Hong 1993). Throws std::domain_error when min degree is 0.
double hong_bound(const Graph& g);

// sqrt(2m (omega-1)/omega), an upper bound for lambda in terms of the
// clique number (Nikiforov 2002). Needs m >= 1 and omega >= 2.
double nikiforov_bound(const Graph& g, int omega);

}  // namespace randic
