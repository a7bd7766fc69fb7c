/*
  graph6 reader and writer.

  Format summary (as used by nauty and friends): a length header N(n)
  followed by the upper triangle of the adjacency matrix in column-major
  order, x(0,1) x(0,2) x(1,2) x(0,3) ..., packed into 6-bit groups padded
  with zeros, each group emitted as the printable character group+63.

  Header forms:
    0 <= n <= 62          one byte, n+63
    63 <= n <= 258047     '~' followed by three bytes of the 18-bit n
    258048 <= n < 2^18    '~' '~' followed by six bytes of the 36-bit n

  The parser accepts exactly canonical strings (shortest header form,
  zero padding bits, no trailing bytes), so parse followed by write is
  byte-identical.
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& message, std::size_t byte_offset);
  std::size_t byte_offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

struct ParsedGraphLine {
  std::size_t line_number;
  std::string text;
  Graph graph;
};

// One graph6 string per line; blank lines and lines starting with '#'
// are ignored. Parse failures rethrow Graph6Error with "line N: "
// prepended to the message.
std::vector<ParsedGraphLine> read_graph6_lines(std::istream& in);

namespace detail {

// Header codec, exposed so the large-n forms can be tested without
// materialising the payload.
std::string encode_graph6_order(std::int64_t n);
std::int64_t decode_graph6_order(std::string_view text, std::size_t& pos);

}  // namespace detail

}  // namespace randic
