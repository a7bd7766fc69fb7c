#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/indices.hpp"
#include "randic/spectral.hpp"

using namespace randic;

TEST_SUITE("spectral") {

TEST_CASE("known eigenvalues") {
  CHECK(spectral_radius(make_complete(4)).lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(make_complete_bipartite(2, 3)).lambda ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));
  // P_3: characteristic polynomial x^3 - 2x, largest root sqrt(2).
  CHECK(spectral_radius(make_path(3)).lambda ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(spectral_radius(make_cycle(5)).lambda == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(make_petersen()).lambda == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(spectral_radius(make_star(5)).lambda == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("result metadata") {
  SpectralResult dense = spectral_radius(make_cycle(8));
  CHECK(dense.method == SpectralMethod::dense);
  CHECK(dense.converged);
  CHECK(dense.residual <= 1e-10);

  SpectralOptions tiny_cutoff;
  tiny_cutoff.dense_cutoff = 0;
  SpectralResult iterative = spectral_radius(make_cycle(8), tiny_cutoff);
  CHECK(iterative.method == SpectralMethod::iterative);
  CHECK(iterative.converged);
  CHECK(iterative.lambda == doctest::Approx(2.0).epsilon(1e-9));

  Graph edgeless = Graph::from_edge_list(3, {});
  SpectralResult zero = spectral_radius(edgeless);
  CHECK(zero.converged);
  CHECK(zero.lambda == 0.0);
}

TEST_CASE("iterative path agrees with the dense one") {
  SpectralOptions force_iterative;
  force_iterative.dense_cutoff = 0;
  auto corpus = test::family_corpus();
  for (const auto& [id, g] : corpus) {
    CAPTURE(id);
    SpectralResult a = spectral_radius(g);
    SpectralResult b = spectral_radius(g, force_iterative);
    REQUIRE(a.converged);
    REQUIRE(b.converged);
    CHECK(std::fabs(a.lambda - b.lambda) <= 1e-8);
  }

  // Bipartite graphs exercise the +max_degree shift: without it the
  // +-lambda pair stalls the iteration.
  for (const auto& g :
       {make_complete_bipartite(3, 3), make_cycle(6), make_star(9)}) {
    SpectralResult r = spectral_radius(g, force_iterative);
    CHECK(r.converged);
    CHECK(std::fabs(r.lambda - spectral_radius(g).lambda) <= 1e-8);
  }

  // Disconnected with a repeated Perron value.
  Graph two_k4 = Graph::from_edge_list(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  SpectralResult split = spectral_radius(two_k4, force_iterative);
  CHECK(split.converged);
  CHECK(split.lambda == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("running out of iterations reports failure, not a guess") {
  // Needs an irregular graph: on regular graphs the uniform start vector
  // is already the Perron vector and one step converges.
  SpectralOptions strangled;
  strangled.dense_cutoff = 0;
  strangled.max_iterations = 2;
  SpectralResult r = spectral_radius(make_path(6), strangled);
  CHECK(!r.converged);
  CHECK(r.iterations == 2);
  CHECK(r.residual > strangled.tolerance);
}

TEST_CASE("matches the independent dense oracle") {
  auto corpus = test::family_corpus();
  for (auto& g : test::gnp_corpus(60, 11)) corpus.push_back(std::move(g));
  for (const auto& [id, g] : corpus) {
    CAPTURE(id);
    SpectralResult r = spectral_radius(g);
    REQUIRE(r.converged);
    CHECK(std::fabs(r.lambda - test::eigen_spectral_radius(g)) <= 1e-8);
  }
}

TEST_CASE("regular graphs pin lambda to the degree") {
  for (const auto& [id, g] : test::family_corpus()) {
    DegreeStats stats = degree_stats(g);
    if (stats.max_degree != stats.min_degree) continue;
    CAPTURE(id);
    CHECK(spectral_radius(g).lambda ==
          doctest::Approx(stats.max_degree).epsilon(1e-10));
  }
}

TEST_CASE("perron sandwich and classic upper bounds") {
  auto corpus = test::family_corpus();
  for (auto& g : test::gnp_corpus(40, 5)) corpus.push_back(std::move(g));
  for (const auto& [id, g] : corpus) {
    DegreeStats stats = degree_stats(g);
    if (stats.min_degree < 1) continue;
    CAPTURE(id);
    SpectralResult r = spectral_radius(g);
    REQUIRE(r.converged);
    CHECK(r.lambda >= stats.average_degree - 1e-9);
    CHECK(r.lambda <= stats.max_degree + 1e-9);
    CHECK(r.lambda <= hong_bound(g) + 1e-9);

    // 0.5-power mean of the edge degree products, squared, stays below
    // lambda^2.
    double mean = randic_index(g, 0.5) / static_cast<double>(g.edge_count());
    CHECK(mean * mean <= r.lambda * r.lambda + 1e-9);
  }
}

TEST_CASE("hong bound point values") {
  CHECK(hong_bound(make_complete(4)) == doctest::Approx(3.0));
  CHECK(hong_bound(make_star(5)) == doctest::Approx(2.0));
  CHECK(hong_bound(make_cycle(5)) == doctest::Approx(std::sqrt(6.0)));
  CHECK_THROWS_AS(hong_bound(Graph::from_edge_list(3, {{0, 1}})),
                  std::domain_error);
}

TEST_CASE("nikiforov bound point values") {
  CHECK(nikiforov_bound(make_complete(4), 4) == doctest::Approx(3.0));
  CHECK(nikiforov_bound(make_cycle(5), 2) == doctest::Approx(std::sqrt(5.0)));
  CHECK(nikiforov_bound(make_complete_bipartite(3, 3), 2) ==
        doctest::Approx(3.0));
  CHECK_THROWS_AS(nikiforov_bound(make_complete(4), 1), std::domain_error);
  CHECK_THROWS_AS(nikiforov_bound(Graph::from_edge_list(2, {}), 2),
                  std::domain_error);
}

}  // TEST_SUITE
