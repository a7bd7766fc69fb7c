/*
  Independent oracles for the test suite. Each one deliberately takes a
  different route than the library: Eigen's self-adjoint solver instead
  of the Jacobi/power-iteration paths, subset enumeration instead of
  branch-and-bound, plain backtracking instead of the seeded colouring
  search, and a bit-string graph6 codec instead of the streaming one.
*/
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "randic/families.hpp"
#include "randic/graph.hpp"

namespace randic::test {

double eigen_spectral_radius(const Graph& g);

// Maximum clique by checking every vertex subset; n <= 20 or so.
int brute_force_clique(const Graph& g);

// Chromatic number by backtracking over k = 1..n in index order.
int exhaustive_chromatic(const Graph& g);

std::string naive_graph6_encode(const Graph& g);
Graph naive_graph6_decode(const std::string& text);

// Deterministic mixed corpus: named families plus seeded gnp samples.
std::vector<NamedGraph> family_corpus();
std::vector<NamedGraph> gnp_corpus(int trials, std::uint64_t seed);

}  // namespace randic::test
