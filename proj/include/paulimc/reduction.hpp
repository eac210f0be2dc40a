#pragma once

#include <set>
#include <string>
#include <utility>

#include "paulimc/pauli.hpp"

namespace paulimc {

// Undirected simple graph: vertices 0..n-1, unordered edges, no self-loops.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n_vertices);

  int n_vertices() const { return n_vertices_; }
  void add_edge(int u, int v);
  bool edge(int u, int v) const;
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_vertices_ = 0;
  std::set<std::pair<int, int>> edges_;  // normalized u < v
};

// Edge-list text: "n <count>" header, then one "u v" line per edge.
// '#' starts a comment; blank lines are skipped.
SimpleGraph parse_graph(const std::string& text);
SimpleGraph load_graph(const std::string& path);

// Encode a graph as a grouping instance: one observable per vertex, where
// observable i places Z on qubit i and X on every qubit j > i that is NOT
// adjacent to i. Two observables then commute (in both the qubit-wise and
// the general sense) exactly when their vertices share an edge, so the
// fewest commuting families equals the graph's minimum clique cover.
Hamiltonian reduce_to_mcp(const SimpleGraph& g);

// Minimum number of vertex-disjoint cliques covering the graph, found by
// exact branch-and-bound (coloring of the complement). Guarded by TooLarge
// above 12 vertices.
int exact_clique_cover(const SimpleGraph& g);

// End-to-end check of the reduction on one instance: builds the observables,
// confirms their commutation structure reproduces the input edges under both
// commutativity notions, and compares the exact clique cover of the graph
// against an independently computed exact minimum commuting-partition size
// (branch-and-bound set cover over maximal cliques). True iff everything
// agrees. TooLarge above 12 vertices.
bool cross_validate(const SimpleGraph& g);

}  // namespace paulimc
