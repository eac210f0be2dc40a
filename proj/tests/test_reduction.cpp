#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "paulimc/error.hpp"
#include "paulimc/graph.hpp"
#include "paulimc/partition.hpp"
#include "paulimc/pauli.hpp"
#include "paulimc/reduction.hpp"

using namespace paulimc;

namespace {

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

std::set<std::pair<int, int>> commuting_pairs(const Hamiltonian& h, Mode mode) {
  const CommutationGraph g = build_graph(h, mode);
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < g.n_vertices(); ++u) {
    for (int v = u + 1; v < g.n_vertices(); ++v) {
      if (g.edge(u, v)) out.insert({u, v});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("simple graph construction and edge bookkeeping") {
  SimpleGraph g(3);
  CHECK(g.n_vertices() == 3);
  g.add_edge(2, 0);
  CHECK(g.edge(0, 2));
  CHECK(g.edge(2, 0));
  CHECK_FALSE(g.edge(0, 1));
  CHECK(g.edges() == std::set<std::pair<int, int>>{{0, 2}});
  g.add_edge(0, 2);  // idempotent
  CHECK(g.edges().size() == 1);

  CHECK_THROWS_AS(SimpleGraph(0), Error);
  CHECK_THROWS_WITH_AS(g.add_edge(0, 3), doctest::Contains("IndexOutOfRange"), Error);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
}

TEST_CASE("graph file parsing") {
  const SimpleGraph g = parse_graph(
      "# a triangle\n"
      "n 3\n"
      "0 1\n"
      "\n"
      "0 2\n"
      "1 2\n");
  CHECK(g.n_vertices() == 3);
  CHECK(g.edges().size() == 3);

  CHECK_THROWS_WITH_AS(parse_graph("0 1\n"), doctest::Contains("n <count>"), Error);
  CHECK_THROWS_WITH_AS(parse_graph("n 2\n0 5\n"), doctest::Contains("line 2"), Error);
  CHECK_THROWS_AS(parse_graph("n 2\n0\n"), Error);
  CHECK_THROWS_AS(parse_graph("n 2\n0 1 junk\n"), Error);
  CHECK_THROWS_AS(parse_graph("n 2\n1 1\n"), Error);
  CHECK_THROWS_AS(parse_graph("n 0\n"), Error);
  CHECK_THROWS_WITH_AS(load_graph("/nonexistent/graph"), doctest::Contains("IoError"),
                       Error);
}

TEST_CASE("reduction encodes adjacency as commutation") {
  // Triangle: everyone adjacent, so no X padding anywhere.
  const Hamiltonian k3 = reduce_to_mcp(complete_graph(3));
  REQUIRE(k3.n_terms() == 3);
  CHECK(k3.term(0).pauli.letters() == "ZII");
  CHECK(k3.term(1).pauli.letters() == "IZI");
  CHECK(k3.term(2).pauli.letters() == "IIZ");
  CHECK(k3.term(0).coefficient == doctest::Approx(1.0));

  // Two isolated vertices: the X pad makes the observables anticommute.
  const Hamiltonian lonely = reduce_to_mcp(SimpleGraph(2));
  REQUIRE(lonely.n_terms() == 2);
  CHECK(lonely.term(0).pauli.letters() == "ZX");
  CHECK(lonely.term(1).pauli.letters() == "IZ");
  CHECK_FALSE(commutes_gc(lonely.term(0).pauli, lonely.term(1).pauli));

  // Path edge 0-1 plus isolated 2.
  SimpleGraph path(3);
  path.add_edge(0, 1);
  const Hamiltonian hp = reduce_to_mcp(path);
  CHECK(hp.term(0).pauli.letters() == "ZIX");
  CHECK(hp.term(1).pauli.letters() == "IZX");
  CHECK(hp.term(2).pauli.letters() == "IIZ");
  CHECK(commuting_pairs(hp, Mode::qwc) == path.edges());
  CHECK(commuting_pairs(hp, Mode::gc) == path.edges());
}

TEST_CASE("reduction invariants hold on random graphs") {
  std::mt19937_64 rng(314);
  for (int round = 0; round < 25; ++round) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const SimpleGraph g = random_graph(n, 0.5, rng);
    const Hamiltonian h = reduce_to_mcp(g);
    REQUIRE(h.n_terms() == n);
    for (int i = 0; i < n; ++i) {
      const std::string s = h.term(i).pauli.letters();
      for (int q = 0; q < n; ++q) {
        if (q == i) {
          CHECK(s[static_cast<std::size_t>(q)] == 'Z');
        } else if (q < i) {
          CHECK(s[static_cast<std::size_t>(q)] == 'I');
        } else {
          CHECK(s[static_cast<std::size_t>(q)] == (g.edge(i, q) ? 'I' : 'X'));
        }
      }
    }
    // Both commutation notions reproduce the input adjacency exactly.
    CHECK(commuting_pairs(h, Mode::qwc) == g.edges());
    CHECK(commuting_pairs(h, Mode::gc) == g.edges());
  }
}

TEST_CASE("exact clique cover on known families") {
  CHECK(exact_clique_cover(complete_graph(5)) == 1);
  CHECK(exact_clique_cover(SimpleGraph(4)) == 4);

  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(exact_clique_cover(c5) == 3);  // two edges plus a lone vertex

  SimpleGraph big(13);
  CHECK_THROWS_WITH_AS(exact_clique_cover(big), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("exact clique cover matches the subset-DP oracle") {
  std::mt19937_64 rng(2718);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);  // 2..10
    const double p = (round % 3) * 0.3 + 0.2;       // sparse to dense
    const SimpleGraph g = random_graph(n, p, rng);
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
      adjacency[static_cast<std::size_t>(u)] |= 1u << v;
      adjacency[static_cast<std::size_t>(v)] |= 1u << u;
    }
    CAPTURE(round);
    CHECK(exact_clique_cover(g) == oracle::min_clique_cover_dp(adjacency));
  }
}

TEST_CASE("reduction cross-validation agrees along both routes") {
  CHECK(cross_validate(complete_graph(6)));
  CHECK(cross_validate(SimpleGraph(5)));

  SimpleGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(cross_validate(c5));

  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    CAPTURE(round);
    CHECK(cross_validate(random_graph(n, 0.5, rng)));
  }

  SimpleGraph big(13);
  CHECK_THROWS_WITH_AS(cross_validate(big), doctest::Contains("TooLarge"), Error);
}
