#include "randic/graph6.hpp"

#include <istream>

namespace randic {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 18;  // exclusive

bool printable(char c) {
  auto u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

int group_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) {
    throw Graph6Error("unexpected end of graph6 string", text.size());
  }
  if (!printable(text[pos])) {
    throw Graph6Error("character outside printable range 63..126", pos);
  }
  return static_cast<unsigned char>(text[pos]) - 63;
}

}  // namespace

Graph6Error::Graph6Error(const std::string& message, std::size_t byte_offset)
    : std::runtime_error(message + " (byte " + std::to_string(byte_offset) +
                         ")"),
      offset_(byte_offset) {}

namespace detail {

std::string encode_graph6_order(std::int64_t n) {
  if (n < 0 || n >= kMaxOrder) {
    throw std::invalid_argument("graph6 order out of supported range");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  return out;
}

std::int64_t decode_graph6_order(std::string_view text, std::size_t& pos) {
  if (text.empty()) {
    throw Graph6Error("empty graph6 string", 0);
  }
  int first = group_at(text, pos);
  if (first != 63) {
    ++pos;
    return first;
  }
  ++pos;
  int second = group_at(text, pos);
  if (second != 63) {
    std::int64_t n = 0;
    for (int i = 0; i < 3; ++i) {
      n = (n << 6) | group_at(text, pos);
      ++pos;
    }
    if (n <= 62) {
      throw Graph6Error("non-canonical length header (small n in long form)",
                        0);
    }
    return n;
  }
  ++pos;
  std::int64_t n = 0;
  for (int i = 0; i < 6; ++i) {
    n = (n << 6) | group_at(text, pos);
    ++pos;
  }
  if (n <= 258047) {
    throw Graph6Error("non-canonical length header (small n in long form)", 0);
  }
  if (n >= kMaxOrder) {
    throw Graph6Error("graph6 order exceeds supported maximum", 0);
  }
  return n;
}

}  // namespace detail

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  const std::int64_t n64 = detail::decode_graph6_order(text, pos);
  if (n64 < 1) {
    throw Graph6Error("graph6 graphs need at least one vertex", 0);
  }
  const int n = static_cast<int>(n64);

  const std::int64_t nbits = n64 * (n64 - 1) / 2;
  const std::int64_t nbytes = (nbits + 5) / 6;
  if (static_cast<std::int64_t>(text.size()) - static_cast<std::int64_t>(pos) <
      nbytes) {
    throw Graph6Error("truncated graph6 body", text.size());
  }
  if (static_cast<std::int64_t>(text.size()) - static_cast<std::int64_t>(pos) >
      nbytes) {
    throw Graph6Error("trailing bytes after graph6 body",
                      pos + static_cast<std::size_t>(nbytes));
  }

  std::vector<Edge> edges;
  std::int64_t bit_index = 0;
  int current = 0;
  int bits_left = 0;
  std::size_t byte_pos = pos;
  for (VertexId col = 1; col < n; ++col) {
    for (VertexId row = 0; row < col; ++row) {
      if (bits_left == 0) {
        current = group_at(text, byte_pos);
        ++byte_pos;
        bits_left = 6;
      }
      if (current & (1 << (bits_left - 1))) {
        edges.emplace_back(row, col);
      }
      --bits_left;
      ++bit_index;
    }
  }
  // Padding bits of the final group must be zero.
  if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0) {
    throw Graph6Error("nonzero padding bits", byte_pos - 1);
  }
  (void)bit_index;
  return Graph::from_edge_list(n, std::move(edges));
}

std::string write_graph6(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  if (n >= kMaxOrder) {
    throw std::invalid_argument("graph too large for graph6 output");
  }
  std::string out = detail::encode_graph6_order(n);
  int current = 0;
  int used = 0;
  for (VertexId col = 1; col < n; ++col) {
    for (VertexId row = 0; row < col; ++row) {
      current = (current << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(current + 63));
        current = 0;
        used = 0;
      }
    }
  }
  if (used > 0) {
    current <<= (6 - used);
    out.push_back(static_cast<char>(current + 63));
  }
  return out;
}

std::vector<ParsedGraphLine> read_graph6_lines(std::istream& in) {
  std::vector<ParsedGraphLine> parsed;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    // nauty tools may prefix the first graph with the format marker.
    if (line.rfind(">>graph6<<", 0) == 0) {
      line.erase(0, 10);
      if (line.empty()) continue;
    }
    try {
      Graph g = parse_graph6(line);
      parsed.push_back({line_number, line, std::move(g)});
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_number) + ": " +
                            e.what(),
                        e.byte_offset());
    }
  }
  return parsed;
}

}  // namespace randic
