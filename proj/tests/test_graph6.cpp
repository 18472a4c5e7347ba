#include "doctest.h"

#include <random>

#include "zf/enumerate.hpp"
#include "zf/families.hpp"
#include "zf/graph6.hpp"

using namespace zf;

TEST_CASE("graph6 reference strings") {
  // frozen from an independent codec
  CHECK(serialize_graph6(complete(2)) == "A_");
  CHECK(serialize_graph6(complete(3)) == "Bw");
  CHECK(serialize_graph6(Graph(1, {})) == "@");
  CHECK(serialize_graph6(path(4)) == "Ch");
  CHECK(serialize_graph6(cycle(5)) == "Dhc");
  CHECK(serialize_graph6(star(3)) == "Cs");
  CHECK(serialize_graph6(star(4)) == "Ds_");
  CHECK(serialize_graph6(complete_bipartite(2, 3)) == "D]o");
  CHECK(serialize_graph6(Graph(2, {})) == "A?");

  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 long form") {
  // path on 70 vertices, frozen from an independent codec (prefix check)
  std::string p70 = serialize_graph6(path(70));
  CHECK(p70.substr(0, 8) == "~?@EhCGG");
  CHECK(p70.size() == 4 + (70 * 69 / 2 + 5) / 6);
  Graph back = parse_graph6(p70);
  CHECK(back.order() == 70);
  CHECK(back.edge_count() == 69);
  for (int v = 1; v < 70; ++v) CHECK(back.adjacent(v - 1, v));

  // long-form encoding of a small order parses and canonicalizes to short
  CHECK(parse_graph6("~??A_").order() == 2);
  CHECK(serialize_graph6(parse_graph6("~??A_")) == "A_");
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = random_graph(n, 0.4, rng);
    Graph back = parse_graph6(serialize_graph6(g));
    CHECK(back.order() == g.order());
    for (int u = 0; u < n; ++u)
      CHECK(back.neighbors(u) == g.neighbors(u));
  }
  // across the long-form boundary
  for (int n : {62, 63, 64, 100}) {
    Graph g = random_graph(n, 0.1, rng);
    Graph back = parse_graph6(serialize_graph6(g));
    for (int u = 0; u < n; ++u)
      CHECK(back.neighbors(u) == g.neighbors(u));
  }
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);    // order 0
  CHECK_THROWS_AS(parse_graph6("Bw "), ParseError);  // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // truncated body
  CHECK_THROWS_AS(parse_graph6("A\x1f"), ParseError);  // byte out of range
  CHECK_THROWS_AS(parse_graph6("Aw"), ParseError);   // nonzero padding

  try {
    parse_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  try {
    parse_graph6("A\x1f");
  } catch (const ParseError& e) {
    CHECK(e.position == 1);
  }
}

TEST_CASE("edge list parsing") {
  Graph p3 = parse_edge_list("0 1\n1 2");
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);

  Graph k2 = parse_edge_list("0 1\n1 0");
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);

  Graph iso = parse_edge_list("0 2");
  CHECK(iso.order() == 3);
  CHECK(iso.edge_count() == 1);
  CHECK(iso.degree(1) == 0);

  Graph ws = parse_edge_list("  0   1 \n\n 1 2\n");
  CHECK(ws.order() == 3);
  CHECK(ws.edge_count() == 2);
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse_edge_list("0 1\n2 -1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
  try {
    parse_edge_list("0 1\n1 2\n3 3");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("\n\n"), ParseError);
}
