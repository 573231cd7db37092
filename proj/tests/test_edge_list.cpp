#include <catch2/catch_amalgamated.hpp>

#include "sqroot/edge_list.hpp"

using namespace sqroot;

TEST_CASE("parse canonical edge lists", "[edgelist]") {
  CHECK(parse_edge_list("3 3\n0 1\n1 2\n0 2\n") == complete_graph(3));
  CHECK(parse_edge_list("1 0\n") == Graph(1));
  CHECK(parse_edge_list("# comment\n4 2\n\n0 1\n# mid comment\n2 3\n") ==
        Graph(4, {{0, 1}, {2, 3}}));
  // reversed endpoints are normalized
  CHECK(parse_edge_list("3 2\n1 0\n2 1\n") == path_graph(3));
}

TEST_CASE("parse errors carry line numbers", "[edgelist]") {
  auto expect_error = [](const std::string& text, int line, const std::string& needle) {
    try {
      parse_edge_list(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line_number == line);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("2 1\n0 0\n", 2, "self-loop");
  expect_error("3 2\n0 1\n0 1\n", 3, "duplicate edge");
  expect_error("3 2\n0 1\n1 0\n", 3, "duplicate edge");
  expect_error("3 1\n0 7\n", 2, "out of range");
  expect_error("bogus\n", 1, "malformed header");
  expect_error("3 2\n0 1\n", 2, "expected 2 edges");
  expect_error("2 1\n0 1 9\n", 2, "malformed edge");
  expect_error("2 1\n0 1\n0 1\n", 3, "trailing");
  expect_error("", 0, "missing header");
  // comment placement does not shift reported line numbers
  expect_error("# hi\n2 1\n# there\n0 0\n", 4, "self-loop");
}

TEST_CASE("format round-trips", "[edgelist]") {
  Graph g(5, {{0, 4}, {1, 2}, {2, 4}});
  CHECK(parse_edge_list(format_edge_list(g)) == g);
  CHECK(format_edge_list(Graph(2, {{0, 1}})) == "2 1\n0 1\n");

  std::string dot = format_dot(path_graph(3));
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}

TEST_CASE("decomposition serialization", "[edgelist]") {
  Decomposition dec{WidthKind::tree, {{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(format_decomposition(dec) == "bag 0 : 0 1\nbag 1 : 1 2\ntree-edge 0 1\n");
  Decomposition pd{WidthKind::path, {{0, 1}, {1, 2}}, {}};
  CHECK(format_decomposition(pd) == "bag 0 : 0 1\nbag 1 : 1 2\n");
}
