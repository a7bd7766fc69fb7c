#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "randic/families.hpp"
#include "randic/graph6.hpp"

using namespace randic;

TEST_SUITE("graph6") {

TEST_CASE("known strings") {
  Graph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(k4.adjacent(u, v));
  CHECK(write_graph6(make_complete(4)) == "C~");

  Graph empty5 = parse_graph6("D??");
  CHECK(empty5.vertex_count() == 5);
  CHECK(empty5.edge_count() == 0);

  Graph single = parse_graph6("@");
  CHECK(single.vertex_count() == 1);
  CHECK(write_graph6(single) == "@");
}

TEST_CASE("round trip is byte identical on the corpus") {
  for (const auto& [id, g] : test::family_corpus()) {
    CAPTURE(id);
    std::string encoded = write_graph6(g);
    Graph decoded = parse_graph6(encoded);
    CHECK(decoded == g);
    CHECK(write_graph6(decoded) == encoded);
  }
}

TEST_CASE("agrees with an independent codec") {
  auto corpus = test::family_corpus();
  for (auto& extra : test::gnp_corpus(25, 99)) corpus.push_back(std::move(extra));
  for (const auto& [id, g] : corpus) {
    CAPTURE(id);
    CHECK(write_graph6(g) == test::naive_graph6_encode(g));
    CHECK(test::naive_graph6_decode(write_graph6(g)) == g);
    CHECK(parse_graph6(test::naive_graph6_encode(g)) == g);
  }
}

TEST_CASE("extended header form") {
  Graph big_empty = Graph::from_edge_list(63, {});
  std::string encoded = write_graph6(big_empty);
  CHECK(encoded.substr(0, 4) == std::string("~??~"));  // 63 = 0,0,63
  CHECK(parse_graph6(encoded) == big_empty);
  CHECK(encoded == test::naive_graph6_encode(big_empty));

  Graph path100 = make_path(100);
  CHECK(parse_graph6(write_graph6(path100)) == path100);

  std::size_t pos = 0;
  CHECK(detail::decode_graph6_order(detail::encode_graph6_order(258047), pos) ==
        258047);
  pos = 0;
  CHECK(detail::decode_graph6_order(detail::encode_graph6_order(258048), pos) ==
        258048);
  CHECK(pos == 8);  // long form: two markers plus six groups
  pos = 0;
  CHECK(detail::decode_graph6_order(detail::encode_graph6_order(262143), pos) ==
        262143);
  CHECK_THROWS_AS(detail::encode_graph6_order(262144), std::invalid_argument);
}

TEST_CASE("error reporting with byte offsets") {
  auto offset_of = [](const char* text) {
    try {
      parse_graph6(text);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.byte_offset());
    }
    return -1l;
  };
  CHECK(offset_of("") == 0);              // empty
  CHECK(offset_of("C~~") == 2);           // trailing garbage
  CHECK(offset_of("C") == 1);             // truncated body
  CHECK(offset_of("D?\t") == 2);          // control char in body
  CHECK(offset_of(" C~") == 0);           // header below printable range
  CHECK(offset_of("B~") == 1);            // nonzero padding bits (n=3)
  CHECK(offset_of("~??C~") == 0);         // non-canonical header for n=4
  CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);  // zero vertices

  try {
    parse_graph6("C~~");
  } catch (const Graph6Error& e) {
    CHECK(std::string(e.what()).find("byte 2") != std::string::npos);
  }
}

TEST_CASE("mutated and random inputs either parse canonically or throw") {
  std::mt19937_64 rng(4242);
  auto corpus = test::family_corpus();
  std::vector<std::string> seeds;
  for (const auto& [id, g] : corpus) seeds.push_back(write_graph6(g));

  auto probe = [](const std::string& text) {
    try {
      Graph g = parse_graph6(text);
      // Anything accepted must be the canonical encoding of its graph.
      CHECK(write_graph6(g) == text);
    } catch (const Graph6Error&) {
      // fine: rejected with a typed error
    }
  };

  for (int round = 0; round < 4000; ++round) {
    std::string s = seeds[rng() % seeds.size()];
    switch (rng() % 4) {
      case 0:  // flip one byte to a random value
        if (!s.empty()) s[rng() % s.size()] = static_cast<char>(rng() % 256);
        break;
      case 1:  // truncate
        s.resize(rng() % (s.size() + 1));
        break;
      case 2:  // append printable junk
        s.push_back(static_cast<char>(63 + rng() % 64));
        break;
      default: {  // fully random printable-ish string
        s.clear();
        std::size_t len = rng() % 12;
        for (std::size_t i = 0; i < len; ++i) {
          s.push_back(static_cast<char>(32 + rng() % 96));
        }
        break;
      }
    }
    probe(s);
  }
}

TEST_CASE("line reader skips blanks and comments") {
  std::istringstream in("# header comment\nC~\n\nD??\r\n");
  auto lines = read_graph6_lines(in);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].line_number == 2);
  CHECK(lines[0].graph.vertex_count() == 4);
  CHECK(lines[1].line_number == 4);
  CHECK(lines[1].graph.vertex_count() == 5);

  std::istringstream bad("C~\nC~~\n");
  CHECK_THROWS_WITH_AS(static_cast<void>(read_graph6_lines(bad)),
                       doctest::Contains("line 2"), Graph6Error);

  std::istringstream marked(">>graph6<<C~\nD??\n");
  auto from_marked = read_graph6_lines(marked);
  REQUIRE(from_marked.size() == 2);
  CHECK(from_marked[0].graph.vertex_count() == 4);
}

}  // TEST_SUITE
