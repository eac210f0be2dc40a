#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulimc/pauli.hpp"

namespace paulimc {

enum class Mode { naive, qwc, gc };

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

// Undirected compatibility graph over Hamiltonian terms: vertex i is term i
// and an edge means the two strings can be measured simultaneously under
// the chosen commutation notion. Adjacency rows are bitsets.
class CommutationGraph {
 public:
  CommutationGraph(int n_vertices, Mode mode);

  int n_vertices() const noexcept { return n_; }
  Mode mode() const noexcept { return mode_; }

  void add_edge(int u, int v);
  bool edge(int u, int v) const;
  int degree(int v) const;
  std::uint64_t n_edges() const;

  // Row bitset for vertex v, one bit per vertex (self bit always clear).
  const std::vector<std::uint64_t>& row(int v) const;
  int words_per_row() const noexcept { return words_; }

 private:
  void check_vertex(int v) const;

  int n_;
  int words_;
  Mode mode_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// Evaluates the pairwise predicate selected by mode (qwc or gc) over all
// term pairs. Mode naive is rejected: it has no compatibility notion.
CommutationGraph build_graph(const Hamiltonian& h, Mode mode);

// Writes "u v" ascending edge lines preceded by an "n <count>" header.
void dump_edges(const CommutationGraph& g, std::ostream& out);

}  // namespace paulimc
