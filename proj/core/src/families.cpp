#include "randic/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace randic {

namespace {

[[noreturn]] void bad(const std::string& message) {
  throw std::invalid_argument(message);
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

Graph make_star(int n) {
  if (n < 2) bad("star needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_complete(int n) {
  if (n < 1) bad("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) bad("complete bipartite sides must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, std::move(edges));
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) bad("complete multipartite needs at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) bad("part sizes must be >= 1");
    n += p;
  }
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_turan(int n, int r) {
  if (n < 1 || r < 1) bad("turan graph needs n >= 1 and r >= 1");
  if (n % r != 0) bad("turan graph needs r | n (equal part sizes)");
  return make_complete_multipartite(std::vector<int>(r, n / r));
}

Graph make_cycle(int n) {
  if (n < 3) bad("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_path(int n) {
  if (n < 2) bad("path needs n >= 2");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
  if (n < 3) bad("circulant needs n >= 3");
  std::set<int> normalized;
  for (int o : offsets) {
    if (o < 1 || o > n / 2) bad("circulant offsets must lie in 1..n/2");
    normalized.insert(o);
  }
  if (normalized.empty()) bad("circulant needs at least one offset");
  std::set<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int o : normalized) {
      int w = (v + o) % n;
      edges.insert({std::min(v, w), std::max(v, w)});
    }
  }
  return Graph::from_edge_list(n, {edges.begin(), edges.end()});
}

Graph make_petersen() {
  // Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges join
  // disjoint pairs.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edge_list(10, std::move(edges));
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t raw) {
  return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

}  // namespace detail

Graph make_random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) bad("gnp needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) bad("gnp needs p in [0,1]");
  std::mt19937_64 rng(detail::splitmix64(seed));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (detail::uniform01(rng()) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, std::move(edges));
}

Graph make_random_tree(int n, std::uint64_t seed) {
  if (n < 2) bad("random tree needs n >= 2");
  std::mt19937_64 rng(detail::splitmix64(seed));
  // Pruefer sequence decode; modulo draw is fine here, uniformity of the
  // tree distribution is not part of the contract.
  std::vector<int> code(std::max(0, n - 2));
  for (int& c : code) c = static_cast<int>(rng() % static_cast<unsigned>(n));
  std::vector<int> remaining_degree(n, 1);
  for (int c : code) ++remaining_degree[c];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining_degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--remaining_degree[c] == 1) leaves.insert(c);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Graph::from_edge_list(n, std::move(edges));
}

namespace {

struct ParamValues {
  std::vector<double> values;
  bool is_int = true;
};

ParamValues parse_values(const std::string& key, const std::string& raw) {
  ParamValues out;
  auto parse_number = [&](const std::string& tok) -> double {
    try {
      std::size_t used = 0;
      double v = std::stod(tok, &used);
      if (used != tok.size()) bad("bad number '" + tok + "' for " + key);
      if (v != std::floor(v)) out.is_int = false;
      return v;
    } catch (const std::invalid_argument&) {
      bad("bad number '" + tok + "' for " + key);
    } catch (const std::out_of_range&) {
      bad("number out of range '" + tok + "' for " + key);
    }
  };
  if (auto dots = raw.find(".."); dots != std::string::npos) {
    double lo = parse_number(raw.substr(0, dots));
    double hi = parse_number(raw.substr(dots + 2));
    if (!out.is_int) bad("ranges must be integral for " + key);
    if (lo > hi) bad("empty range for " + key);
    if (hi - lo > 1e6) bad("range too large for " + key);
    for (double v = lo; v <= hi; v += 1.0) out.values.push_back(v);
    return out;
  }
  std::stringstream ss{raw};
  std::string tok;
  char delim = raw.find('|') != std::string::npos ? '|' : '+';
  while (std::getline(ss, tok, delim)) {
    if (tok.empty()) bad("empty value in list for " + key);
    out.values.push_back(parse_number(tok));
  }
  if (out.values.empty()) bad("no values for " + key);
  return out;
}

std::vector<int> int_values(const ParamValues& pv, const std::string& key) {
  if (!pv.is_int) bad(key + " must be integral");
  std::vector<int> out;
  out.reserve(pv.values.size());
  for (double v : pv.values) out.push_back(static_cast<int>(v));
  return out;
}

const ParamValues& require(const std::map<std::string, ParamValues>& params,
                           const std::string& key, const std::string& family) {
  auto it = params.find(key);
  if (it == params.end()) bad(family + " needs parameter '" + key + "'");
  return it->second;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) bad("empty family name");
  if (colon != std::string_view::npos) {
    std::stringstream ss{std::string(text.substr(colon + 1))};
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        bad("parameter '" + item + "' is not key=value");
      }
      spec.params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  if (spec.name == "random_gnp") spec.name = "gnp";
  if (spec.name == "random_tree") spec.name = "tree";
  static const std::set<std::string> known = {
      "star",  "complete", "complete_bipartite", "complete_multipartite",
      "turan", "cycle",    "path",               "circulant",
      "petersen", "gnp",   "tree"};
  if (!known.count(spec.name)) bad("unknown family '" + spec.name + "'");
  return spec;
}

std::vector<NamedGraph> expand_family(const FamilySpec& spec,
                                      std::uint64_t seed, int trials) {
  std::map<std::string, ParamValues> params;
  for (const auto& [k, v] : spec.params) params[k] = parse_values(k, v);
  std::vector<NamedGraph> out;

  auto id1 = [&](int n) {
    return spec.name + "(" + std::to_string(n) + ")";
  };

  if (spec.name == "petersen") {
    out.push_back({"petersen", make_petersen()});
    return out;
  }
  if (spec.name == "star" || spec.name == "complete" || spec.name == "cycle" ||
      spec.name == "path") {
    for (int n : int_values(require(params, "n", spec.name), "n")) {
      Graph g = spec.name == "star"       ? make_star(n)
                : spec.name == "complete" ? make_complete(n)
                : spec.name == "cycle"    ? make_cycle(n)
                                          : make_path(n);
      out.push_back({id1(n), std::move(g)});
    }
    return out;
  }
  if (spec.name == "complete_bipartite") {
    for (int a : int_values(require(params, "a", spec.name), "a")) {
      for (int b : int_values(require(params, "b", spec.name), "b")) {
        out.push_back({"complete_bipartite(" + std::to_string(a) + "," +
                           std::to_string(b) + ")",
                       make_complete_bipartite(a, b)});
      }
    }
    return out;
  }
  if (spec.name == "complete_multipartite") {
    auto parts = int_values(require(params, "parts", spec.name), "parts");
    std::string label;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) label += '+';
      label += std::to_string(parts[i]);
    }
    out.push_back({"complete_multipartite(" + label + ")",
                   make_complete_multipartite(parts)});
    return out;
  }
  if (spec.name == "turan") {
    for (int n : int_values(require(params, "n", spec.name), "n")) {
      for (int r : int_values(require(params, "r", spec.name), "r")) {
        out.push_back({"turan(" + std::to_string(n) + "," + std::to_string(r) +
                           ")",
                       make_turan(n, r)});
      }
    }
    return out;
  }
  if (spec.name == "circulant") {
    auto offsets = int_values(require(params, "offsets", spec.name),
                              "offsets");
    std::string off_label;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if (i) off_label += ',';
      off_label += std::to_string(offsets[i]);
    }
    for (int n : int_values(require(params, "n", spec.name), "n")) {
      out.push_back({"circulant(" + std::to_string(n) + ";" + off_label + ")",
                     make_circulant(n, offsets)});
    }
    return out;
  }
  if (spec.name == "gnp") {
    auto ns = int_values(require(params, "n", spec.name), "n");
    auto ps = require(params, "p", spec.name).values;
    for (int t = 0; t < trials; ++t) {
      std::uint64_t trial_seed = detail::splitmix64(
          seed ^ detail::splitmix64(static_cast<std::uint64_t>(t) + 1));
      std::mt19937_64 rng(trial_seed);
      int n = ns[rng() % ns.size()];
      double p = ps[rng() % ps.size()];
      // Redraw until the sample has no isolated vertex.
      Graph g = make_random_gnp(n, p, rng());
      int attempts = 0;
      while (*std::min_element(g.degrees_by_vertex().begin(),
                               g.degrees_by_vertex().end()) == 0) {
        if (++attempts > 10000) {
          bad("gnp parameters keep producing isolated vertices");
        }
        g = make_random_gnp(n, p, rng());
      }
      out.push_back({"gnp(n=" + std::to_string(n) + ",p=" + fmt_double(p) +
                         ",t=" + std::to_string(t) + ")",
                     std::move(g)});
    }
    return out;
  }
  if (spec.name == "tree") {
    auto ns = int_values(require(params, "n", spec.name), "n");
    for (int t = 0; t < trials; ++t) {
      std::uint64_t trial_seed = detail::splitmix64(
          seed ^ detail::splitmix64(static_cast<std::uint64_t>(t) + 0x9e37ULL));
      std::mt19937_64 rng(trial_seed);
      int n = ns[rng() % ns.size()];
      out.push_back({"tree(n=" + std::to_string(n) + ",t=" + std::to_string(t) +
                         ")",
                     make_random_tree(n, rng())});
    }
    return out;
  }
  bad("unknown family '" + spec.name + "'");
}

}  // namespace randic
