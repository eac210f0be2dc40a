#include "paulimc/graph.hpp"

#include <bit>
#include <ostream>

#include "paulimc/error.hpp"

namespace paulimc {

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::naive: return "naive";
    case Mode::qwc: return "qwc";
    case Mode::gc: return "gc";
  }
  return "?";
}

Mode mode_from_name(const std::string& name) {
  if (name == "naive") return Mode::naive;
  if (name == "qwc") return Mode::qwc;
  if (name == "gc") return Mode::gc;
  fail(Errc::parse_error, "unknown mode \"" + name + "\"");
}

CommutationGraph::CommutationGraph(int n_vertices, Mode mode)
    : n_(n_vertices), words_((n_vertices + 63) / 64), mode_(mode) {
  if (n_vertices <= 0) fail(Errc::empty_string, "graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_),
              std::vector<std::uint64_t>(static_cast<std::size_t>(words_), 0));
}

void CommutationGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) fail(Errc::index_out_of_range, "vertex " + std::to_string(v));
}

void CommutationGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::index_out_of_range, "self loop at " + std::to_string(u));
  adj_[u][v / 64] |= 1ull << (v % 64);
  adj_[v][u / 64] |= 1ull << (u % 64);
}

bool CommutationGraph::edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u][v / 64] >> (v % 64)) & 1u;
}

int CommutationGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t w : adj_[v]) d += std::popcount(w);
  return d;
}

std::uint64_t CommutationGraph::n_edges() const {
  std::uint64_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::uint64_t>(degree(v));
  return twice / 2;
}

const std::vector<std::uint64_t>& CommutationGraph::row(int v) const {
  check_vertex(v);
  return adj_[v];
}

CommutationGraph build_graph(const Hamiltonian& h, Mode mode) {
  if (mode == Mode::naive) {
    fail(Errc::parse_error, "naive grouping has no compatibility graph");
  }
  CommutationGraph g(h.n_terms(), mode);
  for (int i = 0; i < h.n_terms(); ++i) {
    for (int j = i + 1; j < h.n_terms(); ++j) {
      bool ok = mode == Mode::qwc ? commutes_qwc(h.term(i).pauli, h.term(j).pauli)
                                  : commutes_gc(h.term(i).pauli, h.term(j).pauli);
      if (ok) g.add_edge(i, j);
    }
  }
  return g;
}

void dump_edges(const CommutationGraph& g, std::ostream& out) {
  out << "n " << g.n_vertices() << "\n";
  for (int u = 0; u < g.n_vertices(); ++u) {
    for (int v = u + 1; v < g.n_vertices(); ++v) {
      if (g.edge(u, v)) out << u << " " << v << "\n";
    }
  }
}

}  // namespace paulimc
