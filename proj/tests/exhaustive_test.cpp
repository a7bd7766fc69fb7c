#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "randic/bounds.hpp"
#include "randic/spectral.hpp"
#include "randic/verify.hpp"

using namespace randic;

namespace {

// Every labelled graph on n vertices, edge set = bitmask over the
// n*(n-1)/2 vertex pairs.
std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> graphs;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask & (1u << b)) edges.push_back(pairs[b]);
    }
    graphs.push_back(Graph::from_edge_list(n, std::move(edges)));
  }
  return graphs;
}

}  // namespace

TEST_SUITE("exhaustive") {

TEST_CASE("every labelled graph on 4 and 5 vertices passes the registry") {
  SuiteConfig config;
  for (int n : {4, 5}) {
    std::vector<NamedGraph> corpus;
    for (auto& g : all_graphs(n)) {
      corpus.push_back({"n" + std::to_string(n), std::move(g)});
    }
    VerificationReport report = run_verification(corpus, config);
    CAPTURE(n);
    CHECK(report.summary.violated == 0);
    CHECK(report.summary.equality_failures == 0);
    CHECK(report.summary.skipped == 0);
    CHECK(report.summary.checked > 0);
  }
}

TEST_CASE("every labelled graph on 5 vertices agrees with the oracles") {
  for (const Graph& g : all_graphs(5)) {
    SpectralResult r = spectral_radius(g);
    REQUIRE(r.converged);
    CHECK(std::fabs(r.lambda - test::eigen_spectral_radius(g)) <= 1e-8);

    auto omega = clique_number(g);
    REQUIRE(omega.has_value());
    CHECK(*omega == test::brute_force_clique(g));

    ChromaticResult chi = chromatic_number(g);
    REQUIRE(chi.exact);
    CHECK(chi.value == test::exhaustive_chromatic(g));
  }
}

}  // TEST_SUITE
