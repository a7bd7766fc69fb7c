#include <doctest.h>

#include <stdexcept>

#include <numeric>

#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/graph.hpp"

using namespace randic;

TEST_SUITE("graph") {

TEST_CASE("edge list validation") {
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}),
                  std::invalid_argument);
  Graph g = Graph::from_edge_list(3, {{2, 0}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(g.adjacent(2, 0));
  CHECK(!g.adjacent(1, 2));
}

TEST_CASE("degree stats on named graphs") {
  DegreeStats claw = degree_stats(make_star(4));  // K_{1,3}
  CHECK(claw.max_degree == 3);
  CHECK(claw.min_degree == 1);
  CHECK(claw.average_degree == doctest::Approx(1.5));
  CHECK(claw.sequence == std::vector<int>{3, 1, 1, 1});

  DegreeStats petersen = degree_stats(make_petersen());
  CHECK(petersen.max_degree == 3);
  CHECK(petersen.min_degree == 3);
  CHECK(petersen.average_degree == doctest::Approx(3.0));

  DegreeStats square = degree_stats(make_cycle(4));
  CHECK(square.max_degree == 2);
  CHECK(square.min_degree == 2);
  CHECK(square.average_degree == doctest::Approx(2.0));
}

TEST_CASE("handshake over the corpus") {
  for (const auto& [id, g] : test::family_corpus()) {
    CAPTURE(id);
    const auto& degs = g.degrees_by_vertex();
    long long total = std::accumulate(degs.begin(), degs.end(), 0ll);
    CHECK(total == 2 * g.edge_count());
    DegreeStats stats = degree_stats(g);
    CHECK(stats.min_degree <= stats.average_degree);
    CHECK(stats.average_degree <= stats.max_degree);
    CHECK((stats.min_degree >= 1) == !classify(g).has_isolated_vertex);
  }
}

TEST_CASE("edge degree products") {
  CHECK(edge_degree_products(make_star(5)) ==
        std::vector<std::int64_t>{4, 4, 4, 4});
  CHECK(edge_degree_products(make_path(3)) == std::vector<std::int64_t>{2, 2});
  CHECK(edge_degree_products(make_complete(4)) ==
        std::vector<std::int64_t>(6, 9));
  Graph isolated = Graph::from_edge_list(2, {});
  CHECK_THROWS_AS(edge_degree_products(isolated), std::domain_error);
}

TEST_CASE("classification flags") {
  GraphClassFlags k23 = classify(make_complete_bipartite(2, 3));
  CHECK(k23.semiregular_bipartite);
  CHECK(!k23.regular);
  CHECK(k23.bipartite);
  CHECK(k23.connected);

  GraphClassFlags c6 = classify(make_cycle(6));
  CHECK(c6.regular);
  CHECK(c6.semiregular_bipartite);
  CHECK(c6.bipartite);

  GraphClassFlags p4 = classify(make_path(4));
  CHECK(p4.bipartite);
  CHECK(!p4.semiregular_bipartite);  // sides mix degrees 1 and 2

  GraphClassFlags star = classify(make_star(7));
  CHECK(star.star);
  CHECK(star.tree);
  CHECK(star.connected);
  CHECK(!star.has_isolated_vertex);
  CHECK(star.chemical == false);  // centre degree 6

  GraphClassFlags k5 = classify(make_complete(5));
  CHECK(k5.complete);
  CHECK(!k5.bipartite);
  CHECK(k5.regular);
  CHECK(k5.chemical);  // max degree 4; it is the bound C5 must exclude
  CHECK(classify(make_complete(4)).chemical);
  CHECK(!classify(make_complete(6)).chemical);

  GraphClassFlags petersen = classify(make_petersen());
  CHECK(petersen.regular);
  CHECK(!petersen.bipartite);
  CHECK(!petersen.semiregular_bipartite);
  CHECK(petersen.triangle_free);

  GraphClassFlags k2 = classify(make_complete(2));
  CHECK(k2.star);
  CHECK(k2.tree);
  CHECK(k2.complete);
}

TEST_CASE("classification of disconnected graphs") {
  // Two triangles: regular but disconnected.
  Graph two_k3 = Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  GraphClassFlags f = classify(two_k3);
  CHECK(!f.connected);
  CHECK(f.regular);
  CHECK(!f.bipartite);
  CHECK(!f.tree);

  // Two copies of K_{1,2}: still semiregular bipartite.
  Graph two_claws =
      Graph::from_edge_list(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  CHECK(classify(two_claws).semiregular_bipartite);

  // K_{1,2} + K_{1,3}: side degree pairs differ.
  Graph mixed = Graph::from_edge_list(
      7, {{0, 1}, {0, 2}, {3, 4}, {3, 5}, {3, 6}});
  CHECK(!classify(mixed).semiregular_bipartite);

  Graph with_isolated = Graph::from_edge_list(3, {{0, 1}});
  GraphClassFlags iso = classify(with_isolated);
  CHECK(iso.has_isolated_vertex);
  CHECK(!iso.connected);
  CHECK(!iso.semiregular_bipartite);
}

TEST_CASE("flag invariants over the corpus") {
  for (const auto& [id, g] : test::family_corpus()) {
    CAPTURE(id);
    GraphClassFlags f = classify(g);
    if (f.star) CHECK(f.tree);
    if (f.tree) CHECK(f.connected);
    if (f.complete && g.vertex_count() >= 3) CHECK(!f.bipartite);
    if (f.semiregular_bipartite) CHECK(f.bipartite);
    if (f.regular && f.bipartite && !f.has_isolated_vertex) {
      CHECK(f.semiregular_bipartite);
    }
  }
}

TEST_CASE("equality helper classes") {
  CHECK(is_complete_bipartite(make_complete_bipartite(1, 4)));
  CHECK(is_complete_bipartite(make_complete_bipartite(3, 3)));
  CHECK(!is_complete_bipartite(make_cycle(6)));
  CHECK(!is_complete_bipartite(
      Graph::from_edge_list(4, {{0, 1}, {2, 3}})));  // 2 x K_2

  CHECK(is_regular_complete_multipartite(make_complete(5)));
  CHECK(is_regular_complete_multipartite(make_turan(6, 3)));
  CHECK(is_regular_complete_multipartite(make_complete_bipartite(3, 3)));
  CHECK(!is_regular_complete_multipartite(make_complete_bipartite(2, 3)));
  CHECK(!is_regular_complete_multipartite(make_cycle(6)));
  CHECK(!is_regular_complete_multipartite(make_petersen()));
}

}  // TEST_SUITE
