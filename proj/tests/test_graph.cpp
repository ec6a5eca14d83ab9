#include <doctest.h>

#include "support/oracles.hpp"
#include "toricrank/graph.hpp"

using namespace toric;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse_graph") {
  SUBCASE("K4 edge list") {
    Graph g = parse_graph("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.edge(5) == Edge{3, 4});
    CHECK(g.variable_name(0) == "x12");
  }
  SUBCASE("path") {
    Graph g = parse_graph("1 2\n2 3");
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("comments, header, reversed endpoints") {
    Graph g = parse_graph("# a triangle\np 3 3\n2 1\n2 3\n# trailing\n3 1\n");
    CHECK(g.edge(0) == Edge{1, 2});
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("loop") {
    try {
      parse_graph("1 1\n");
      FAIL("expected a loop error");
    } catch (const GraphError& e) {
      CHECK(e.kind() == GraphError::Kind::Loop);
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("duplicate edge reports its line") {
    try {
      parse_graph("1 2\n2 3\n2 1\n");
      FAIL("expected a duplicate error");
    } catch (const GraphError& e) {
      CHECK(e.kind() == GraphError::Kind::DuplicateEdge);
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("disconnected") {
    try {
      parse_graph("1 2\n3 4\n");
      FAIL("expected a disconnected error");
    } catch (const GraphError& e) {
      CHECK(e.kind() == GraphError::Kind::Disconnected);
    }
    // an isolated vertex announced by the header also disconnects
    CHECK_THROWS_AS(parse_graph("p 3 1\n1 2\n"), GraphError);
  }
  SUBCASE("malformed") {
    try {
      parse_graph("1 2\n2 x\n");
      FAIL("expected a malformed error");
    } catch (const GraphError& e) {
      CHECK(e.kind() == GraphError::Kind::Malformed);
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("1 2 3\n"), GraphError);
    CHECK_THROWS_AS(parse_graph("p 3 5\n1 2\n2 3\n"), GraphError);
  }
}

TEST_CASE("incidence columns sum to two") {
  Graph g = complete_graph(6);
  for (const auto& col : g.incidence_columns()) {
    int s = 0;
    for (int x : col) s += x;
    CHECK(s == 2);
  }
  auto col = g.incidence_column(g.edge_between(2, 5).value());
  CHECK(col == std::vector<int>{0, 1, 0, 0, 1, 0});
}

TEST_CASE("variable names switch format above nine vertices") {
  CHECK(complete_graph(9).variable_name(0) == "x12");
  CHECK(complete_graph(10).variable_name(0) == "x{1,2}");
}

TEST_CASE("is_bipartite") {
  auto k33 = is_bipartite(complete_bipartite_graph(3, 3));
  REQUIRE(k33);
  CHECK(k33->left == std::vector<int>{1, 2, 3});
  CHECK(k33->right == std::vector<int>{4, 5, 6});
  CHECK_FALSE(is_bipartite(complete_graph(4)));
  auto edge = is_bipartite(parse_graph("1 2"));
  REQUIRE(edge);
  CHECK(edge->left == std::vector<int>{1});
  CHECK(edge->right == std::vector<int>{2});
}

TEST_CASE("enumerate_even_cycles") {
  SUBCASE("K4 has three 4-cycles in canonical order") {
    Graph g = complete_graph(4);
    auto cycles = enumerate_even_cycles(g);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(cycles[1].vertices == std::vector<int>{1, 2, 4, 3});
    CHECK(cycles[2].vertices == std::vector<int>{1, 3, 2, 4});
    // 0-based edges 12=0 13=1 14=2 23=3 24=4 34=5
    CHECK(cycles[0].edges == std::vector<int>{0, 3, 5, 2});
  }
  SUBCASE("K33: 9 four-cycles and 6 six-cycles, matching brute force") {
    Graph g = complete_bipartite_graph(3, 3);
    auto cycles = enumerate_even_cycles(g);
    int four = 0;
    int six = 0;
    for (const auto& c : cycles) (c.length() == 4 ? four : six)++;
    CHECK(four == 9);
    CHECK(six == 6);
    CHECK(cycles.size() == oracle::count_even_cycles(g));
  }
  SUBCASE("tree") { CHECK(enumerate_even_cycles(parse_graph("1 2\n2 3\n2 4\n4 5")).empty()); }
  SUBCASE("bounded call is a prefix filter of the unbounded call") {
    Graph g = complete_graph(6);
    auto all = enumerate_even_cycles(g);
    auto four = enumerate_even_cycles(g, 4);
    std::vector<EdgeCycle> expected;
    for (const auto& c : all)
      if (c.length() == 4) expected.push_back(c);
    CHECK(four == expected);
  }
  SUBCASE("K_n 4-cycle count is 3 C(n,4) and agrees with brute force") {
    for (int n = 4; n <= 7; ++n) {
      Graph g = complete_graph(n);
      auto four = enumerate_even_cycles(g, 4);
      const long c4 = static_cast<long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
      CHECK(static_cast<long>(four.size()) == 3 * c4);
      if (n <= 6) CHECK(enumerate_even_cycles(g).size() == oracle::count_even_cycles(g));
    }
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(enumerate_even_cycles(complete_graph(4), 5), InvalidArgument);
    CHECK_THROWS_AS(enumerate_even_cycles(cycle_graph(14)), InvalidArgument);
    CHECK(enumerate_even_cycles(cycle_graph(14), 14).size() == 1);
  }
}

TEST_CASE("random bipartite graphs: cycles are even and the coloring is proper") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_bipartite_graph(rng, 4, 4, 11);
    auto parts = is_bipartite(g);
    REQUIRE(parts);
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count() + 1), 0);
    for (int v : parts->right) side[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : g.edges()) CHECK(side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]);
    CHECK(enumerate_even_cycles(g).size() == oracle::count_even_cycles(g));
  }
}

TEST_CASE("cycle_has_chord") {
  Graph k4 = complete_graph(4);
  for (const auto& c : enumerate_even_cycles(k4)) CHECK(cycle_has_chord(k4, c));
  Graph k33 = complete_bipartite_graph(3, 3);
  for (const auto& c : enumerate_even_cycles(k33)) CHECK(cycle_has_chord(k33, c) == (c.length() == 6));
  EdgeCycle bogus{{1, 2, 3, 5}, {0, 3, 5, 2}};
  CHECK_THROWS_AS(cycle_has_chord(k4, bogus), GraphError);
}

TEST_CASE("enumerate_k4_subgraphs") {
  CHECK(enumerate_k4_subgraphs(complete_graph(6)).size() == 15);
  CHECK(enumerate_k4_subgraphs(complete_bipartite_graph(3, 3)).empty());
  auto one = enumerate_k4_subgraphs(complete_graph(4));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("induced_subgraph") {
  auto k6 = induced_subgraph(complete_graph(6), {1, 2, 3, 4});
  CHECK(k6.graph.edge_count() == 6);
  CHECK(enumerate_k4_subgraphs(k6.graph).size() == 1);

  Graph k33 = complete_bipartite_graph(3, 3);
  auto cyc = enumerate_even_cycles(k33, 4).front();
  auto h = induced_subgraph(k33, cyc.vertices);
  CHECK(h.graph.edge_count() == 4);
  for (std::size_t i = 0; i < h.edge_map.size(); ++i) {
    CHECK(std::find(cyc.edges.begin(), cyc.edges.end(), h.edge_map[i]) != cyc.edges.end());
  }

  auto edge = induced_subgraph(complete_graph(4), {1, 2});
  CHECK(edge.graph.edge_count() == 1);
  CHECK(edge.edge_map == std::vector<int>{0});

  CHECK_THROWS_AS(induced_subgraph(k33, {1, 2}), GraphError);
}

TEST_SUITE_END();
