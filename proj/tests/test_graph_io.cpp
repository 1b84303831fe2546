#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "domcube/dom_graph.hpp"
#include "domcube/enumeration.hpp"
#include "domcube/families.hpp"
#include "domcube/graph_io.hpp"
#include "domcube/isomorphism.hpp"
#include "test_util.hpp"

using namespace domcube;
using test_util::error_code_of;

TEST_CASE("graph6 decode") {
  Graph p2 = parse_graph6("A_");
  CHECK(p2 == path_graph(2));

  Graph from_cr = parse_graph6("Cr");
  CHECK(from_cr.order() == 4);
  CHECK(from_cr.edge_list() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(is_isomorphic(from_cr, cycle_graph(4)));

  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 encode") {
  CHECK(write_graph6(path_graph(2)) == "A_");
  CHECK(write_graph6(edgeless_graph(1)) == "@");
  // C4 labeled 0-1-2-3-0: triangle bits 101101 -> 45 + 63 = 'l'.
  CHECK(write_graph6(cycle_graph(4)) == "Cl");
  CHECK(error_code_of([] { write_graph6(edgeless_graph(63)); }) == Errc::order_out_of_range);
}

TEST_CASE("graph6 validation") {
  CHECK(error_code_of([] { parse_graph6(""); }) == Errc::bad_header);
  CHECK(error_code_of([] { parse_graph6("~AA"); }) == Errc::bad_header);
  CHECK(error_code_of([] { parse_graph6("A"); }) == Errc::bad_length);
  CHECK(error_code_of([] { parse_graph6("A__"); }) == Errc::bad_length);
  CHECK(error_code_of([] { parse_graph6("A "); }) == Errc::non_printable_byte);
  CHECK(error_code_of([] { parse_graph6("?"); }) == Errc::order_out_of_range);

  SECTION("padding is policed unless lenient") {
    // Order 3 uses 3 of 6 bits; "B@" sets only a pad bit.
    CHECK(error_code_of([] { parse_graph6("B@"); }) == Errc::nonzero_padding);
    Graph g = parse_graph6("B@", /*lenient=*/true);
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 0);
  }
}

TEST_CASE("graph6 round trip is byte-exact") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, rng());
    std::string text = write_graph6(g);
    for (char ch : text) {
      unsigned byte = static_cast<unsigned char>(ch);
      REQUIRE(byte >= 63);
      REQUIRE(byte <= 126);
    }
    Graph back = parse_graph6(text);
    REQUIRE(back == g);
    REQUIRE(write_graph6(back) == text);
  }
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edgelist("n 2\n0 1") == path_graph(2));
  CHECK(parse_edgelist("n 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4));
  CHECK(parse_edgelist("n 3\n") == edgeless_graph(3));

  try {
    parse_edgelist("n 3\n0 3");
    FAIL("expected InvalidEdge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_edge);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_code_of([] { parse_edgelist("3\n0 1"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edgelist("n 3\n0 0"); }) == Errc::invalid_edge);
  CHECK(error_code_of([] { parse_edgelist("n 3\n0 1 2"); }) == Errc::parse_error);
  CHECK(error_code_of([] { parse_edgelist(""); }) == Errc::parse_error);
}

TEST_CASE("edge list writer inverts the parser") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, rng());
    CHECK(parse_edgelist(write_edgelist(g)) == g);
  }
}

TEST_CASE("dot export") {
  std::string p2 = write_dot(path_graph(2));
  CHECK(p2.find("0 -- 1;") != std::string::npos);

  std::string lonely = write_dot(edgeless_graph(1));
  CHECK(lonely.find("0;") != std::string::npos);
  CHECK(lonely.find("--") == std::string::npos);

  DomGraph h = build_full_dominating_graph(path_graph(2));
  std::string dot = write_dot(h);
  CHECK(dot.find("label=\"{0}\"") != std::string::npos);
  CHECK(dot.find("label=\"{1}\"") != std::string::npos);
  CHECK(dot.find("label=\"{0,1}\"") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 4);  // two "--" edges
}
