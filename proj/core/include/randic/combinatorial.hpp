/*
  Exact clique number and chromatic number for desk-scale graphs, with
  node budgets so a blown search reports failure instead of a wrong
  answer.
*/
#pragma once

#include <optional>

#include "randic/graph.hpp"

namespace randic {

struct SearchBudget {
  long long max_nodes = 10'000'000;
};

// Exact maximum clique size via bitset branch-and-bound with greedy
// colouring upper bounds; branch vertices are taken in descending colour
// order, base ordering is by descending degree (ties by index), so
// results are deterministic. Returns nullopt when the budget runs out
// (or when the graph is too large for bitset rows).
std::optional<int> clique_number(const Graph& g, const SearchBudget& budget = {});

struct ChromaticResult {
  int value = 0;
  bool exact = false;
};

struct ChromaticOptions {
  int exact_max_vertices = 16;
  SearchBudget budget{};
};

// Exact chromatic number for small graphs by testing k-colourability from
// the clique lower bound up to the DSATUR upper bound; beyond
// exact_max_vertices (or when the budget runs out) the DSATUR value is
// returned with exact = false, which is still a valid upper bound.
ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opts = {});

// DSATUR greedy colouring; always an upper bound on the chromatic number.
int dsatur_bound(const Graph& g);

struct CombinatorialInvariants {
  std::optional<int> clique_number;  // nullopt when the budget ran out
  int chromatic_number = 0;
  bool chromatic_exact = false;
};

CombinatorialInvariants combinatorial_invariants(
    const Graph& g, const SearchBudget& clique_budget = {},
    const ChromaticOptions& chromatic_opts = {});

}  // namespace randic
