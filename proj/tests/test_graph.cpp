#include <sstream>
#include <string>

#include "doctest.h"
#include "paulimc/error.hpp"
#include "paulimc/graph.hpp"
#include "paulimc/pauli.hpp"

using namespace paulimc;

TEST_CASE("mode names round trip") {
  CHECK(mode_from_name("qwc") == Mode::qwc);
  CHECK(mode_from_name("gc") == Mode::gc);
  CHECK(mode_from_name("naive") == Mode::naive);
  CHECK(std::string(mode_name(Mode::gc)) == "gc");
  CHECK_THROWS_AS(mode_from_name("bogus"), Error);
}

TEST_CASE("commutation graph construction on the two-qubit four-term set") {
  const Hamiltonian h = Hamiltonian::parse_text("1 IZ\n1 ZI\n1 XX\n1 YY\n");

  const CommutationGraph gc = build_graph(h, Mode::gc);
  CHECK(gc.n_vertices() == 4);
  CHECK(gc.n_edges() == 2);
  CHECK(gc.edge(0, 1));   // IZ - ZI
  CHECK(gc.edge(2, 3));   // XX - YY
  CHECK_FALSE(gc.edge(0, 2));
  CHECK_FALSE(gc.edge(1, 3));
  CHECK(gc.degree(0) == 1);
  CHECK(gc.degree(2) == 1);

  const CommutationGraph qwc = build_graph(h, Mode::qwc);
  CHECK(qwc.n_edges() == 1);
  CHECK(qwc.edge(0, 1));
  CHECK_FALSE(qwc.edge(2, 3));  // XX and YY differ on both qubits
}

TEST_CASE("naive mode never builds a graph") {
  const Hamiltonian h = Hamiltonian::parse_text("1 X\n1 Z\n");
  CHECK_THROWS_AS(build_graph(h, Mode::naive), Error);
}

TEST_CASE("graph rejects malformed construction") {
  CHECK_THROWS_AS(CommutationGraph(0, Mode::gc), Error);
  CommutationGraph g(3, Mode::gc);
  CHECK_THROWS_AS(g.add_edge(1, 1), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);
  g.add_edge(0, 2);
  g.add_edge(2, 0);  // idempotent
  CHECK(g.n_edges() == 1);
  CHECK(g.edge(2, 0));
}

TEST_CASE("edge dump is deterministic and ordered") {
  const Hamiltonian h = Hamiltonian::parse_text("1 IZ\n1 ZI\n1 ZZ\n");
  const CommutationGraph g = build_graph(h, Mode::qwc);
  std::ostringstream out;
  dump_edges(g, out);
  CHECK(out.str() == "n 3\n0 1\n0 2\n1 2\n");
}
