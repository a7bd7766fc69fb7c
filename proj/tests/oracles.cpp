#include "oracles.hpp"

#include <Eigen/Dense>

#include <bit>
#include <stdexcept>

namespace randic::test {

double eigen_spectral_radius(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  return solver.eigenvalues().maxCoeff();
}

int brute_force_clique(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute force wants n <= 20");
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      if (!(mask & (1u << u))) continue;
      for (int v = u + 1; v < n && clique; ++v) {
        if ((mask & (1u << v)) && !g.adjacent(u, v)) clique = false;
      }
    }
    if (clique) best = std::max(best, std::popcount(mask));
  }
  return best;
}

namespace {

bool colorable(const Graph& g, std::vector<int>& colour, int v, int k,
               int used) {
  if (v == g.vertex_count()) return true;
  const int limit = std::min(k - 1, used);
  for (int c = 0; c <= limit; ++c) {
    bool ok = true;
    for (int w : g.neighbors(v)) {
      if (colour[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    colour[v] = c;
    if (colorable(g, colour, v + 1, k, std::max(used, c + 1))) return true;
    colour[v] = -1;
  }
  return false;
}

}  // namespace

int exhaustive_chromatic(const Graph& g) {
  const int n = g.vertex_count();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> colour(n, -1);
    if (colorable(g, colour, 0, k, 0)) return k;
  }
  return n;
}

std::string naive_graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string bits;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      bits.push_back(g.adjacent(row, col) ? '1' : '0');
    }
  }
  while (bits.size() % 6 != 0) bits.push_back('0');

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    std::string nbits;
    for (int b = 17; b >= 0; --b) nbits.push_back((n >> b) & 1 ? '1' : '0');
    out.push_back('~');
    for (int group = 0; group < 3; ++group) {
      int value = 0;
      for (int b = 0; b < 6; ++b) {
        value = value * 2 + (nbits[group * 6 + b] - '0');
      }
      out.push_back(static_cast<char>(value + 63));
    }
  }
  for (std::size_t group = 0; group < bits.size(); group += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + (bits[group + b] - '0');
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

Graph naive_graph6_decode(const std::string& text) {
  std::size_t pos = 0;
  long n;
  if (text.at(0) != '~') {
    n = text.at(0) - 63;
    pos = 1;
  } else {
    n = 0;
    for (pos = 1; pos < 4; ++pos) n = n * 64 + (text.at(pos) - 63);
  }
  std::string bits;
  for (; pos < text.size(); ++pos) {
    int value = text.at(pos) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((value >> b) & 1 ? '1' : '0');
  }
  std::vector<Edge> edges;
  std::size_t i = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++i) {
      if (bits.at(i) == '1') edges.emplace_back(row, col);
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), std::move(edges));
}

std::vector<NamedGraph> family_corpus() {
  std::vector<NamedGraph> corpus;
  auto add = [&](const char* spec) {
    for (auto& g : expand_family(parse_family_spec(spec), 7, 5)) {
      corpus.push_back(std::move(g));
    }
  };
  add("star:n=2..12");
  add("complete:n=2..8");
  add("complete_bipartite:a=1..5,b=1..5");
  add("cycle:n=3..12");
  add("path:n=2..10");
  add("turan:n=6,r=3");
  add("turan:n=8,r=4");
  add("turan:n=12,r=3");
  add("circulant:n=5..10,offsets=1|2");
  add("petersen");
  add("tree:n=4..12");
  return corpus;
}

std::vector<NamedGraph> gnp_corpus(int trials, std::uint64_t seed) {
  FamilySpec spec = parse_family_spec("gnp:n=4..12,p=0.3|0.5|0.8");
  return expand_family(spec, seed, trials);
}

}  // namespace randic::test
