#include "randic/indices.hpp"

#include <algorithm>
#include <stdexcept>

#include "randic/means.hpp"

namespace randic {

namespace {

void require_min_degree(const Graph& g) {
  const auto& degs = g.degrees_by_vertex();
  if (*std::min_element(degs.begin(), degs.end()) < 1) {
    throw std::domain_error("index is inapplicable: isolated vertex present");
  }
}

}  // namespace

double randic_index(const Graph& g, double alpha) {
  require_min_degree(g);
  if (g.edge_count() == 0) {
    throw std::domain_error("index needs at least one edge");
  }
  if (alpha == 0.0) return static_cast<double>(g.edge_count());
  std::vector<double> products;
  products.reserve(g.edges().size());
  for (std::int64_t p : edge_degree_products(g)) {
    products.push_back(static_cast<double>(p));
  }
  return detail::stable_power_sum(products, alpha);
}

double zeroth_randic_index(const Graph& g, double alpha) {
  require_min_degree(g);
  if (alpha == 0.0) return static_cast<double>(g.vertex_count());
  std::vector<double> degrees;
  degrees.reserve(g.degrees_by_vertex().size());
  for (int d : g.degrees_by_vertex()) degrees.push_back(d);
  return detail::stable_power_sum(degrees, alpha);
}

}  // namespace randic
