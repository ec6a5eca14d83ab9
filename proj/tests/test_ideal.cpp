#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "toricrank/complex.hpp"
#include "toricrank/ideal.hpp"

using namespace toric;

namespace {

std::set<Binomial> as_set(const std::vector<Binomial>& bs) { return {bs.begin(), bs.end()}; }

std::set<Binomial> k33_listed(const Graph& g) {
  std::set<Binomial> out;
  for (const auto& [p, q] : fixture::k33_generators()) out.insert(fixture::binomial(g, p, q));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("ideal");

TEST_CASE("monomials and binomials") {
  Graph k4 = complete_graph(4);
  Monomial a = fixture::monomial(k4, "x12x34");
  CHECK(a.total_degree() == 2);
  CHECK(a.support() == std::vector<int>{0, 5});
  CHECK(a.divides(a * a));
  CHECK_FALSE((a * a).divides(a));
  CHECK(to_string(k4, a * a) == "x12^2*x34^2");
  CHECK(to_string(k4, Monomial::one(6)) == "1");

  Binomial b = Binomial::make(fixture::monomial(k4, "x14x23x12"), fixture::monomial(k4, "x12x12x34"));
  CHECK(to_string(k4, b) == "x12*x34 - x14*x23");
  CHECK(b.vector() == std::vector<int>{1, 0, -1, -1, 0, 1});
  CHECK(Binomial::make(a, a).is_zero());
  CHECK(to_string(k4, Binomial::make(a, a)) == "0");
  CHECK(is_homogeneous(k4, b));
}

TEST_CASE("g_degree") {
  Graph k4 = complete_graph(4);
  CHECK(g_degree(k4, fixture::monomial(k4, "x12x34")).b == std::vector<int>{1, 1, 1, 1});
  CHECK(g_degree(k4, Monomial::one(6)).b == std::vector<int>{0, 0, 0, 0});
  CHECK(g_degree(k4, fixture::monomial(k4, "x12x12")).b == std::vector<int>{2, 2, 0, 0});
}

TEST_CASE("binomial_from_walk") {
  Graph k4 = complete_graph(4);
  auto e = [&](int u, int v) { return *k4.edge_between(u, v); };
  CHECK(binomial_from_walk(k4, {e(1, 2), e(2, 3), e(3, 4), e(1, 4)}) == fixture::binomial(k4, "x12x34", "x14x23"));
  CHECK(binomial_from_walk(k4, {e(1, 2), e(1, 2)}).is_zero());
  CHECK_THROWS_AS(binomial_from_walk(k4, {e(1, 2), e(2, 3), e(1, 3)}), InvalidArgument);
  CHECK_THROWS_AS(binomial_from_walk(k4, {e(1, 2), e(3, 4)}), InvalidArgument);

  Graph k33 = complete_bipartite_graph(3, 3);
  auto f = [&](int u, int v) { return *k33.edge_between(u, v); };
  CHECK(binomial_from_walk(k33, {f(1, 4), f(2, 4), f(2, 5), f(1, 5)}) == fixture::binomial(k33, "x14x25", "x15x24"));

  SUBCASE("every walk binomial is homogeneous") {
    for (const auto& c : enumerate_even_cycles(k33)) CHECK(is_homogeneous(k33, binomial_from_cycle(k33, c)));
  }
}

TEST_CASE("polynomial_in_ideal") {
  Graph k4 = complete_graph(4);
  CHECK(polynomial_in_ideal(k4, fixture::polynomial(k4, "x12x34-x14x23")));
  CHECK_FALSE(polynomial_in_ideal(k4, fixture::polynomial(k4, "x12")));
  CHECK(polynomial_in_ideal(k4, Polynomial{}));
  Graph k33 = complete_bipartite_graph(3, 3);
  CHECK(polynomial_in_ideal(k33, fixture::polynomial(k33, "x14x25-x15x24+x15x36-x16x35")));
  for (const auto& text : fixture::k33_radical_generators()) CHECK(polynomial_in_ideal(k33, fixture::polynomial(k33, text)));
  CHECK_FALSE(polynomial_in_ideal(k33, fixture::polynomial(k33, "x14x25-x15x36")));
  // products stay in the ideal
  Polynomial f = to_polynomial(fixture::binomial(k4, "x12x34", "x14x23"));
  CHECK(polynomial_in_ideal(k4, multiply(f, fixture::polynomial(k4, "x13+x24x24"))));
}

TEST_CASE("enumerate_fiber") {
  Graph k4 = complete_graph(4);
  Fiber f = enumerate_fiber(k4, GDegree{{1, 1, 1, 1}});
  REQUIRE(f.size() == 3);
  CHECK(f.members[0] == fixture::monomial(k4, "x12x34"));
  CHECK(f.members[1] == fixture::monomial(k4, "x13x24"));
  CHECK(f.members[2] == fixture::monomial(k4, "x14x23"));
  CHECK(enumerate_fiber(k4, GDegree{{0, 0, 0, 0}}).members == std::vector<Monomial>{Monomial::one(6)});
  CHECK(enumerate_fiber(k4, GDegree{{1, 0, 0, 0}}).size() == 0);

  Graph k33 = complete_bipartite_graph(3, 3);
  Fiber g = enumerate_fiber(k33, g_degree(k33, fixture::monomial(k33, "x14x25")));
  CHECK(g.size() == 2);
  CHECK(std::set<Monomial>(g.members.begin(), g.members.end()) ==
        std::set<Monomial>{fixture::monomial(k33, "x14x25"), fixture::monomial(k33, "x15x24")});

  SUBCASE("agrees with the naive oracle on random degrees") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
      Graph h = oracle::random_connected_graph(rng, 5, 5 + t % 5);
      std::uniform_int_distribution<int> pick(0, h.edge_count() - 1);
      std::uniform_int_distribution<int> len(1, 4);
      Monomial mon = Monomial::one(h.edge_count());
      for (int k = len(rng); k > 0; --k) ++mon.exponents[static_cast<std::size_t>(pick(rng))];
      GDegree b = g_degree(h, mon);
      Fiber fib = enumerate_fiber(h, b);
      CHECK(fib.size() == oracle::fiber_size(h, b.b));
      CHECK(std::is_sorted(fib.members.rbegin(), fib.members.rend()));
      for (const auto& x : fib.members) CHECK(g_degree(h, x) == b);
    }
  }
}

TEST_CASE("fiber_graph") {
  Graph k4 = complete_graph(4);
  Binomial f1 = fixture::binomial(k4, "x12x34", "x14x23");
  Binomial f2 = fixture::binomial(k4, "x12x34", "x13x24");
  Fiber base = enumerate_fiber(k4, GDegree{{1, 1, 1, 1}});
  Fiber both = fiber_graph(base, {f1, f2});
  CHECK(both.connected);
  CHECK(both.adjacency.size() >= 2);
  Fiber one = fiber_graph(base, {f1});
  CHECK_FALSE(one.connected);
  CHECK(one.component_count == 2);
  CHECK(one.component[1] != one.component[0]);  // x13x24 isolated
  CHECK(one.component[2] == one.component[0]);

  Fiber single = fiber_graph(enumerate_fiber(k4, GDegree{{2, 2, 0, 0}}), {});
  CHECK(single.size() == 1);
  CHECK(single.connected);

  SUBCASE("multiples of a generator connect larger fibers") {
    Fiber big = fiber_graph(enumerate_fiber(k4, GDegree{{2, 2, 2, 2}}), {f1, f2});
    CHECK(big.connected);
    CHECK(big.connected == oracle::fiber_connected_pairwise(big.members, {f1, f2}));
    Fiber half = fiber_graph(enumerate_fiber(k4, GDegree{{2, 2, 2, 2}}), {f1});
    CHECK(half.connected == oracle::fiber_connected_pairwise(half.members, {f1}));
  }
}

TEST_CASE("minimal_generating_set") {
  SUBCASE("K33: the nine listed binomials, all indispensable") {
    Graph g = complete_bipartite_graph(3, 3);
    GeneratingSet gs = minimal_generating_set(g);
    CHECK(gs.mu() == 9);
    CHECK(gs.indispensable_count() == 9);
    CHECK(as_set(gs.binomials) == k33_listed(g));
    CHECK(as_set(indispensable_binomials(g)) == k33_listed(g));
    CHECK(gs.all_quadratic());
    CHECK_FALSE(gs.bound_relative);
    CHECK(gs.degree_bound == 3);
  }
  SUBCASE("K4: two of the three circuit binomials, none indispensable") {
    Graph g = complete_graph(4);
    GeneratingSet gs = minimal_generating_set(g);
    REQUIRE(gs.mu() == 2);
    CHECK(gs.indispensable_count() == 0);
    std::set<Binomial> circuits;
    for (const auto& c : circuits_bruteforce(g.incidence_columns())) circuits.insert(binomial_from_circuit(c));
    for (const auto& b : gs.binomials) CHECK(circuits.count(b) == 1);
    CHECK(indispensable_binomials(g).empty());
  }
  SUBCASE("C4 and C6") {
    Graph c4 = cycle_graph(4);
    auto ind = indispensable_binomials(c4);
    REQUIRE(ind.size() == 1);
    CHECK(ind[0].vector() == std::vector<int>{1, -1, 1, -1});
    Graph c6 = cycle_graph(6);
    GeneratingSet gs = minimal_generating_set(c6);
    REQUIRE(gs.mu() == 1);
    CHECK(gs.binomials[0].degree() == 3);
    CHECK_FALSE(is_quadratically_generated(c6));
  }
  SUBCASE("K_n") {
    for (int n = 4; n <= 6; ++n) CHECK(is_quadratically_generated(complete_graph(n)));
    GeneratingSet gs = minimal_generating_set(complete_graph(6));
    CHECK(gs.mu() == 30);
    CHECK(gs.indispensable_count() == 0);
  }
  SUBCASE("tree") {
    GeneratingSet gs = minimal_generating_set(parse_graph("1 2\n2 3\n2 4"));
    CHECK(gs.mu() == 0);
    CHECK(gs.processed_degrees.empty());
  }
  SUBCASE("bound too small") {
    GenerationOptions o;
    o.degree_bound = 2;
    CHECK_THROWS_AS(minimal_generating_set(cycle_graph(6), o), BoundTooSmall);
    CHECK(minimal_generating_set(complete_bipartite_graph(3, 3), o).mu() == 9);
  }
  SUBCASE("odd cycles: two triangles sharing a vertex") {
    Graph g = parse_graph("1 2\n2 3\n1 3\n3 4\n4 5\n3 5");
    GeneratingSet gs = minimal_generating_set(g);
    REQUIRE(gs.mu() == 1);
    CHECK(gs.binomials[0].degree() == 3);
    CHECK(gs.bound_relative);
  }
  SUBCASE("soundness, determinism and the bipartite cross-check on random graphs") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 12; ++t) {
      Graph g = t % 2 ? oracle::random_bipartite_graph(rng, 3, 4, 9) : oracle::random_connected_graph(rng, 6, 8);
      GeneratingSet gs = minimal_generating_set(g);
      for (const auto& b : gs.processed_degrees) {
        CHECK(oracle::fiber_connected_pairwise(enumerate_fiber(g, b).members, gs.binomials));
      }
      for (const auto& b : gs.binomials) {
        CHECK(is_homogeneous(g, b));
        CHECK_FALSE(b.is_zero());
      }
      std::set<GDegree> ind_degrees;
      for (std::size_t i = 0; i < gs.mu(); ++i)
        if (gs.indispensable[i]) CHECK(ind_degrees.insert(g_degree(g, gs.binomials[i].plus)).second);
      CHECK(minimal_generating_set(g).binomials == gs.binomials);
      if (is_bipartite(g)) {
        CHECK(gs.mu() == chordless_cycle_binomials(g).size());
        CHECK(as_set(indispensable_binomials(g)) == as_set(chordless_cycle_binomials(g)));
      }
    }
  }
}

TEST_CASE("indispensable_monomials") {
  Graph k33 = complete_bipartite_graph(3, 3);
  auto mons = indispensable_monomials(k33, 4);
  std::set<Monomial> expected;
  for (const auto& [p, q] : fixture::k33_generators()) {
    expected.insert(fixture::monomial(k33, p));
    expected.insert(fixture::monomial(k33, q));
  }
  CHECK(mons.size() == 18);
  CHECK(std::set<Monomial>(mons.begin(), mons.end()) == expected);

  Graph k4 = complete_graph(4);
  auto k4m = indispensable_monomials(k4, 4);
  CHECK(std::set<Monomial>(k4m.begin(), k4m.end()) ==
        std::set<Monomial>{fixture::monomial(k4, "x12x34"), fixture::monomial(k4, "x13x24"), fixture::monomial(k4, "x14x23")});
  CHECK(indispensable_monomials(parse_graph("1 2\n2 3"), 4).empty());

  SUBCASE("supports match C_min under the bipartite hypothesis") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 8; ++t) {
      Graph g = oracle::random_bipartite_graph(rng, 3, 3, 7 + t % 3);
      std::set<std::vector<int>> supports;
      for (const auto& mon : indispensable_monomials(g, default_degree_bound(g))) supports.insert(mon.support());
      auto cmin = compute_c_min(g);
      CHECK(supports == std::set<std::vector<int>>(cmin.begin(), cmin.end()));
    }
  }
}

TEST_CASE("multiple divisibility") {
  Graph k33 = complete_bipartite_graph(3, 3);
  auto cycles = enumerate_even_cycles(k33, 4);
  REQUIRE(cycles.size() == 9);
  for (const auto& c : cycles) CHECK(sample_multiple_divisibility(k33, c, 100, 7));
  CHECK(sample_multiple_divisibility(k33, cycles[0], 0, 7));

  // H = f_Γ^2
  const EdgeCycle& c = cycles[0];
  Polynomial f = to_polynomial(binomial_from_cycle(k33, c));
  CHECK(multiple_has_both_divisibilities(k33, c, f));
  CHECK(multiple_has_both_divisibilities(k33, c, Polynomial{}));

  Graph k4 = complete_graph(4);
  CHECK_THROWS_AS(sample_multiple_divisibility(k4, enumerate_even_cycles(k4)[0], 10, 1), InvalidArgument);
  auto six = enumerate_even_cycles(k33);
  CHECK_THROWS_AS(sample_multiple_divisibility(k33, six.back(), 10, 1), InvalidArgument);
}

TEST_SUITE_END();
