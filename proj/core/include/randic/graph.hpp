/*
  Simple undirected graphs with cached degree data, plus the degree
  statistics, structural classification and edge degree products used by
  the bounds machinery.

  Graphs are immutable after construction; every operation here is a pure
  read and safe to call from multiple threads.
*/
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace randic {

using VertexId = int;

// Stored as (min endpoint, max endpoint).
using Edge = std::pair<VertexId, VertexId>;

class Graph {
 public:
  // Builds a graph on vertices 0..n-1 from an edge list. Edges may be
  // given in any order and orientation; self-loops, duplicates and
  // out-of-range endpoints are rejected with std::invalid_argument.
  static Graph from_edge_list(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::int64_t edge_count() const noexcept {
    return static_cast<std::int64_t>(edges_.size());
  }

  bool adjacent(VertexId u, VertexId v) const noexcept;

  // Edges sorted lexicographically on (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept;
  int degree(VertexId v) const noexcept { return degree_[v]; }
  const std::vector<int>& degrees_by_vertex() const noexcept { return degree_; }

  // Bitset adjacency rows are materialised for graphs small enough that
  // the clique search and triangle scans can use word-parallel set ops.
  bool has_bit_rows() const noexcept { return row_words_ > 0; }
  std::size_t row_words() const noexcept { return row_words_; }
  std::span<const std::uint64_t> bit_row(VertexId v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<VertexId> adjacency_;             // CSR, sorted per vertex
  std::vector<std::size_t> adjacency_offset_;   // size n+1
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> bits_;             // n * row_words_
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  double average_degree = 0.0;  // 2m/n
  std::vector<int> sequence;    // descending: d_1 >= ... >= d_n
};

DegreeStats degree_stats(const Graph& g);

struct GraphClassFlags {
  bool connected = false;
  bool regular = false;
  bool semiregular_bipartite = false;
  bool bipartite = false;
  bool triangle_free = false;
  bool tree = false;
  bool chemical = false;  // max degree <= 4
  bool complete = false;
  bool star = false;
  bool has_isolated_vertex = false;
};

// Computes all class flags exactly. Bipartition via BFS 2-colouring;
// the semiregular check requires a single degree per side, consistent
// across components, and no isolated vertices.
GraphClassFlags classify(const Graph& g);

// The multiset {d_u * d_v : uv in E} in lexicographic edge order.
// Throws std::domain_error on an empty edge set.
std::vector<std::int64_t> edge_degree_products(const Graph& g);

// Connected K_{a,b} (every cross pair present).
bool is_complete_bipartite(const Graph& g);

// Complete multipartite with all parts of equal size, i.e. a regular
// complete omega-partite graph; includes K_n (parts of size 1).
bool is_regular_complete_multipartite(const Graph& g);

}  // namespace randic
