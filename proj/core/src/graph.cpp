#include "randic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace randic {

namespace {

// Bitset rows are skipped above this size; the dense representation would
// cost n^2/8 bytes and the algorithms that need it are infeasible there
// anyway.
constexpr int kMaxBitRowVertices = 4096;

}  // namespace

Graph Graph::from_edge_list(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("parallel edges are not allowed");
  }

  Graph g;
  g.n_ = vertex_count;
  g.edges_ = std::move(edges);

  g.degree_.assign(vertex_count, 0);
  for (const auto& [u, v] : g.edges_) {
    ++g.degree_[u];
    ++g.degree_[v];
  }

  g.adjacency_offset_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) {
    g.adjacency_offset_[v + 1] = g.adjacency_offset_[v] + g.degree_[v];
  }
  g.adjacency_.resize(g.adjacency_offset_[vertex_count]);
  std::vector<std::size_t> fill(g.adjacency_offset_.begin(),
                                g.adjacency_offset_.end() - 1);
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + g.adjacency_offset_[v],
              g.adjacency_.begin() + g.adjacency_offset_[v + 1]);
  }

  if (vertex_count <= kMaxBitRowVertices) {
    g.row_words_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    g.bits_.assign(g.row_words_ * vertex_count, 0);
    for (const auto& [u, v] : g.edges_) {
      g.bits_[u * g.row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
      g.bits_[v * g.row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const noexcept {
  if (u == v) return false;
  if (row_words_ > 0) {
    return (bits_[u * row_words_ + v / 64] >> (v % 64)) & 1;
  }
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const noexcept {
  return {adjacency_.data() + adjacency_offset_[v],
          adjacency_offset_[v + 1] - adjacency_offset_[v]};
}

std::span<const std::uint64_t> Graph::bit_row(VertexId v) const noexcept {
  return {bits_.data() + v * row_words_, row_words_};
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.sequence = g.degrees_by_vertex();
  std::sort(s.sequence.begin(), s.sequence.end(), std::greater<int>());
  s.max_degree = s.sequence.front();
  s.min_degree = s.sequence.back();
  s.average_degree =
      2.0 * static_cast<double>(g.edge_count()) / g.vertex_count();
  return s;
}

namespace {

struct Coloring {
  bool bipartite = true;
  int components = 0;
  std::vector<int> side;       // 0/1 within component, valid if bipartite
  std::vector<int> component;  // component index per vertex
};

Coloring two_color(const Graph& g) {
  const int n = g.vertex_count();
  Coloring c;
  c.side.assign(n, -1);
  c.component.assign(n, -1);
  std::queue<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (c.component[s] >= 0) continue;
    const int comp = c.components++;
    c.component[s] = comp;
    c.side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (VertexId v : g.neighbors(u)) {
        if (c.component[v] < 0) {
          c.component[v] = comp;
          c.side[v] = c.side[u] ^ 1;
          queue.push(v);
        } else if (c.side[v] == c.side[u]) {
          c.bipartite = false;
        }
      }
    }
  }
  return c;
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.has_bit_rows()) {
      auto ru = g.bit_row(u);
      auto rv = g.bit_row(v);
      for (std::size_t w = 0; w < ru.size(); ++w) {
        if (ru[w] & rv[w]) return true;
      }
    } else {
      auto a = g.neighbors(u);
      auto b = g.neighbors(v);
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        (a[i] < b[j]) ? ++i : ++j;
      }
    }
  }
  return false;
}

// All vertices on one side of a component must share a degree; the
// (side0, side1) degree pair must agree across components as an
// unordered pair.
bool semiregular_bipartite(const Graph& g, const Coloring& c) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> pair_for(c.components, {-1, -1});
  for (VertexId v = 0; v < n; ++v) {
    auto& p = pair_for[c.component[v]];
    int& slot = (c.side[v] == 0) ? p.first : p.second;
    if (slot < 0) {
      slot = g.degree(v);
    } else if (slot != g.degree(v)) {
      return false;
    }
  }
  std::pair<int, int> ref{-1, -1};
  for (auto p : pair_for) {
    if (p.first > p.second) std::swap(p.first, p.second);
    if (ref.first < 0) {
      ref = p;
    } else if (ref != p) {
      return false;
    }
  }
  return true;
}

}  // namespace

GraphClassFlags classify(const Graph& g) {
  const int n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  const DegreeStats deg = degree_stats(g);
  const Coloring col = two_color(g);

  GraphClassFlags f;
  f.connected = (col.components == 1);
  f.regular = (deg.max_degree == deg.min_degree);
  f.bipartite = col.bipartite;
  f.has_isolated_vertex = (deg.min_degree == 0);
  f.semiregular_bipartite =
      col.bipartite && deg.min_degree >= 1 && semiregular_bipartite(g, col);
  f.triangle_free = !has_triangle(g);
  f.tree = f.connected && m == n - 1;
  f.chemical = (deg.max_degree <= 4);
  f.complete = (m == static_cast<std::int64_t>(n) * (n - 1) / 2);
  f.star = f.tree && n >= 2 && deg.max_degree == n - 1;
  return f;
}

std::vector<std::int64_t> edge_degree_products(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::domain_error("edge degree products need at least one edge");
  }
  std::vector<std::int64_t> products;
  products.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    products.push_back(static_cast<std::int64_t>(g.degree(u)) * g.degree(v));
  }
  return products;
}

bool is_complete_bipartite(const Graph& g) {
  const Coloring col = two_color(g);
  if (!col.bipartite || col.components != 1) return false;
  std::int64_t a = 0;
  for (int s : col.side) a += (s == 0);
  const std::int64_t b = g.vertex_count() - a;
  return a >= 1 && b >= 1 && g.edge_count() == a * b;
}

bool is_regular_complete_multipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxBitRowVertices) return false;
  const DegreeStats deg = degree_stats(g);
  if (deg.max_degree != deg.min_degree) return false;
  // Complete multipartite <=> complement components are cliques. Parts are
  // then forced equal by regularity.
  std::vector<int> comp(n, -1);
  int parts = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexId> members;
    std::vector<VertexId> stack{s};
    comp[s] = parts;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (VertexId v = 0; v < n; ++v) {
        if (v != u && comp[v] < 0 && !g.adjacent(u, v)) {
          comp[v] = parts;
          stack.push_back(v);
        }
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (g.adjacent(members[i], members[j])) return false;
      }
    }
    ++parts;
  }
  return true;
}

}  // namespace randic
