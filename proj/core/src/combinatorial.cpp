#include "randic/combinatorial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <vector>

namespace randic {

namespace {

struct BudgetExceeded {};

using Words = std::vector<std::uint64_t>;

bool any(const Words& w) {
  for (auto x : w)
    if (x) return true;
  return false;
}

int lowest_bit(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
  }
  return -1;
}

void clear_bit(Words& w, int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

// Max clique search on the degree-descending relabelled graph.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, long long max_nodes) : max_nodes_(max_nodes) {
    const int n = g.vertex_count();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
    words_ = (static_cast<std::size_t>(n) + 63) / 64;
    rows_.assign(n, Words(words_, 0));
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order_[i]] = i;
    for (const auto& [u, v] : g.edges()) {
      int a = position[u], b = position[v];
      rows_[a][b / 64] |= std::uint64_t{1} << (b % 64);
      rows_[b][a / 64] |= std::uint64_t{1} << (a % 64);
    }
    n_ = n;
  }

  int run() {
    Words all(words_, 0);
    for (int v = 0; v < n_; ++v) all[v / 64] |= std::uint64_t{1} << (v % 64);
    best_ = 0;
    expand(all, 0);
    return best_;
  }

  long long nodes() const { return nodes_; }

 private:
  void expand(Words candidates, int clique_size) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded{};
    if (!any(candidates)) {
      best_ = std::max(best_, clique_size);
      return;
    }
    // Greedy colouring of the candidate subgraph gives per-vertex upper
    // bounds; branching in descending colour order makes the bound tight
    // early.
    std::vector<int> order, colour;
    Words uncoloured = candidates;
    int colours = 0;
    while (any(uncoloured)) {
      ++colours;
      Words cls = uncoloured;
      while (any(cls)) {
        int v = lowest_bit(cls);
        clear_bit(cls, v);
        clear_bit(uncoloured, v);
        for (std::size_t i = 0; i < words_; ++i) cls[i] &= ~rows_[v][i];
        order.push_back(v);
        colour.push_back(colours);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (clique_size + colour[i] <= best_) return;
      int v = order[i];
      Words next(words_);
      for (std::size_t w = 0; w < words_; ++w)
        next[w] = candidates[w] & rows_[v][w];
      expand(std::move(next), clique_size + 1);
      clear_bit(candidates, v);
    }
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<int> order_;
  std::vector<Words> rows_;
  long long nodes_ = 0;
  long long max_nodes_ = 0;
  int best_ = 0;
};

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::queue<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = side[u] ^ 1;
          queue.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Backtracking k-colourability over a fixed vertex order with the usual
// symmetry break: a vertex may only open one new colour.
class ColorSearch {
 public:
  ColorSearch(const Graph& g, std::vector<int> order, long long* nodes,
              long long max_nodes)
      : g_(g), order_(std::move(order)), nodes_(nodes),
        max_nodes_(max_nodes) {}

  bool colourable(int k, int preassigned) {
    k_ = k;
    colour_.assign(g_.vertex_count(), -1);
    for (int i = 0; i < preassigned && i < k; ++i) colour_[order_[i]] = i;
    int start = std::min(preassigned, k);
    return place(start, start);
  }

 private:
  bool place(int index, int used) {
    if (++*nodes_ > max_nodes_) throw BudgetExceeded{};
    if (index == static_cast<int>(order_.size())) return true;
    int v = order_[index];
    int limit = std::min(k_ - 1, used);
    for (int c = 0; c <= limit; ++c) {
      bool ok = true;
      for (int w : g_.neighbors(v)) {
        if (colour_[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour_[v] = c;
      if (place(index + 1, std::max(used, c + 1))) return true;
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> colour_;
  long long* nodes_;
  long long max_nodes_;
  int k_ = 0;
};

}  // namespace

std::optional<int> clique_number(const Graph& g, const SearchBudget& budget) {
  if (g.edge_count() == 0) return 1;
  if (!g.has_bit_rows()) return std::nullopt;  // beyond the bitset limit
  try {
    CliqueSearch search(g, budget.max_nodes);
    return search.run();
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

int dsatur_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<int> saturation(n, 0);
  for (int i = 0; i < n; ++i) seen[i].assign(n + 1, false);
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick < 0 || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] &&
           g.degree(v) > g.degree(pick))) {
        pick = v;
      }
    }
    int c = 0;
    while (seen[pick][c]) ++c;
    colour[pick] = c;
    used = std::max(used, c + 1);
    for (int w : g.neighbors(pick)) {
      if (!seen[w][c]) {
        seen[w][c] = true;
        ++saturation[w];
      }
    }
  }
  return std::max(used, n > 0 ? 1 : 0);
}

ChromaticResult chromatic_number(const Graph& g, const ChromaticOptions& opts) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) return {1, true};
  if (is_bipartite(g)) return {2, true};

  const int upper = dsatur_bound(g);
  if (n > opts.exact_max_vertices) return {upper, false};

  long long nodes = 0;
  std::optional<int> clique = clique_number(g, opts.budget);
  int lower = std::max(clique.value_or(1), 3);  // not bipartite here
  if (lower >= upper) return {upper, true};

  // Clique vertices first (pre-coloured pairwise-adjacent), the rest by
  // descending degree.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  int preassigned = 0;
  if (clique) {
    // Recover one maximum clique greedily for seeding: any clique of the
    // right size works, search again restricted by degree order.
    std::vector<int> clique_vertices;
    for (int v : order) {
      bool ok = true;
      for (int w : clique_vertices) {
        if (!g.adjacent(v, w)) {
          ok = false;
          break;
        }
      }
      if (ok) clique_vertices.push_back(v);
    }
    // The greedy clique may be smaller than omega; it still seeds validly.
    std::vector<int> rest;
    for (int v : order) {
      if (std::find(clique_vertices.begin(), clique_vertices.end(), v) ==
          clique_vertices.end()) {
        rest.push_back(v);
      }
    }
    order = clique_vertices;
    order.insert(order.end(), rest.begin(), rest.end());
    preassigned = static_cast<int>(clique_vertices.size());
    lower = std::max(lower, preassigned);
  }

  try {
    for (int k = lower; k < upper; ++k) {
      ColorSearch search(g, order, &nodes, opts.budget.max_nodes);
      if (search.colourable(k, std::min(preassigned, k))) return {k, true};
    }
    return {upper, true};
  } catch (const BudgetExceeded&) {
    return {upper, false};
  }
}

CombinatorialInvariants combinatorial_invariants(
    const Graph& g, const SearchBudget& clique_budget,
    const ChromaticOptions& chromatic_opts) {
  CombinatorialInvariants out;
  out.clique_number = clique_number(g, clique_budget);
  ChromaticResult chi = chromatic_number(g, chromatic_opts);
  out.chromatic_number = chi.value;
  out.chromatic_exact = chi.exact;
  return out;
}

}  // namespace randic
