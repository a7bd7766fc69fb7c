/*
  General Randic index R_alpha = sum over edges (d_u d_v)^alpha and the
  zeroth-order variant Q_alpha = sum over vertices d_v^alpha.
*/
#pragma once

#include "randic/graph.hpp"

namespace randic {

// R_alpha. Needs m >= 1 and min degree >= 1 (throws std::domain_error
// otherwise); alpha = 0 returns m exactly. Terms are summed in
// descending order, so results are deterministic.
double randic_index(const Graph& g, double alpha);

// Q_alpha. Needs min degree >= 1; alpha = 0 returns n and alpha = 1
// returns 2m exactly.
double zeroth_randic_index(const Graph& g, double alpha);

}  // namespace randic
