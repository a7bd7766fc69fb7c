/*
  Named graph families and the descriptor grammar used by the CLI.

  Descriptors look like "name:key=value,key=value". Values are single
  numbers ("n=7"), inclusive integer ranges ("n=2..20"), lists
  ("p=0.3|0.5|0.8") or '+'-joined integer tuples ("parts=2+2+2").
  Deterministic families enumerate the cartesian product of their
  parameter sets; random families draw `trials` independent samples,
  one parameter choice per trial.

  Randomness comes from std::mt19937_64 seeded through a splitmix64 mix
  of (seed, trial index); uniform variates are derived from raw 64-bit
  outputs so results are identical across platforms. No global state.
*/
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

Graph make_star(int n);                       // n >= 2 vertices, centre 0
Graph make_complete(int n);                   // n >= 1
Graph make_complete_bipartite(int a, int b);  // sides a, b >= 1
Graph make_complete_multipartite(const std::vector<int>& parts);
Graph make_turan(int n, int r);               // r parts, requires r | n
Graph make_cycle(int n);                      // n >= 3
Graph make_path(int n);                       // n >= 2
Graph make_circulant(int n, const std::vector<int>& offsets);
Graph make_petersen();
Graph make_random_gnp(int n, double p, std::uint64_t seed);
Graph make_random_tree(int n, std::uint64_t seed);  // n >= 2, Pruefer code

struct NamedGraph {
  std::string id;
  Graph graph;
};

struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
};

// Parses "name" or "name:k=v,k=v". Throws std::invalid_argument on
// unknown families or malformed parameters.
FamilySpec parse_family_spec(std::string_view text);

// Expands a family spec into concrete graphs. `trials` applies to the
// random families (gnp, tree); gnp samples with at least one isolated
// vertex are redrawn within the trial.
std::vector<NamedGraph> expand_family(const FamilySpec& spec,
                                      std::uint64_t seed, int trials);

namespace detail {

std::uint64_t splitmix64(std::uint64_t x);
double uniform01(std::uint64_t raw);  // 53-bit mantissa in [0,1)

}  // namespace detail

}  // namespace randic
