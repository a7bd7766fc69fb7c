#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/indices.hpp"
#include "randic/means.hpp"

using namespace randic;

TEST_SUITE("indices") {

TEST_CASE("point values") {
  CHECK(randic_index(make_complete(4), -1) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(randic_index(make_star(5), -0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(randic_index(make_cycle(7), 0) == 7.0);

  CHECK(zeroth_randic_index(make_complete(4), 2) == 36.0);
  CHECK(zeroth_randic_index(make_star(4), -1) ==
        doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  CHECK(zeroth_randic_index(make_petersen(), 1) == 30.0);  // 2m
  CHECK(zeroth_randic_index(make_petersen(), 0) == 10.0);  // n
}

TEST_CASE("isolated vertices make the indices inapplicable") {
  Graph lonely = Graph::from_edge_list(3, {{0, 1}});
  CHECK_THROWS_AS(randic_index(lonely, -1), std::domain_error);
  CHECK_THROWS_AS(zeroth_randic_index(lonely, -1), std::domain_error);
}

TEST_CASE("shared path with the power sums") {
  auto corpus = test::family_corpus();
  for (auto& g : test::gnp_corpus(30, 41)) corpus.push_back(std::move(g));
  for (const auto& [id, g] : corpus) {
    if (degree_stats(g).min_degree < 1) continue;
    CAPTURE(id);
    std::vector<double> products;
    for (auto p : edge_degree_products(g)) products.push_back(double(p));
    std::vector<double> degrees(g.degrees_by_vertex().begin(),
                                g.degrees_by_vertex().end());
    for (double alpha : {-2.0, -1.0, -0.5, 0.25, 1.0, 2.0}) {
      CHECK(randic_index(g, alpha) == sum_power(PositiveValues(products), alpha));
      CHECK(zeroth_randic_index(g, alpha) ==
            sum_power(PositiveValues(degrees), alpha));
    }
  }
}

TEST_CASE("closed forms on regular graphs") {
  for (const auto& [id, g] : test::family_corpus()) {
    DegreeStats stats = degree_stats(g);
    if (stats.min_degree != stats.max_degree || stats.min_degree < 1) continue;
    CAPTURE(id);
    const double k = stats.max_degree;
    const double n = g.vertex_count();
    const double m = static_cast<double>(g.edge_count());
    for (double alpha : {-2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0}) {
      CHECK(randic_index(g, alpha) ==
            doctest::Approx(m * std::pow(k, 2 * alpha)).epsilon(1e-12));
      CHECK(zeroth_randic_index(g, alpha) ==
            doctest::Approx(n * std::pow(k, alpha)).epsilon(1e-12));
    }
  }
}

TEST_CASE("monotone in alpha when no degree-1 pendant pair exists") {
  for (const auto& [id, g] : test::gnp_corpus(40, 53)) {
    CAPTURE(id);
    bool all_products_above_one = true;
    for (auto p : edge_degree_products(g)) {
      if (p <= 1) all_products_above_one = false;
    }
    if (!all_products_above_one) continue;
    double previous = randic_index(g, -2.5);
    for (double alpha : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0}) {
      double value = randic_index(g, alpha);
      CHECK(value >= previous - 1e-12 * std::max(1.0, value));
      previous = value;
    }
  }
}

}  // TEST_SUITE
