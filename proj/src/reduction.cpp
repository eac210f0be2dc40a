#include "paulimc/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "paulimc/error.hpp"
#include "paulimc/graph.hpp"

namespace paulimc {

namespace {

constexpr int kExactLimit = 12;  // exhaustive searches beyond this explode

}  // namespace

SimpleGraph::SimpleGraph(int n_vertices) : n_vertices_(n_vertices) {
  if (n_vertices <= 0) fail(Errc::index_out_of_range, "graph needs at least one vertex");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || u >= n_vertices_ || v < 0 || v >= n_vertices_)
    fail(Errc::index_out_of_range, "edge endpoint out of range");
  if (u == v) fail(Errc::parse_error, "self-loops are not allowed");
  edges_.insert({std::min(u, v), std::max(u, v)});
}

bool SimpleGraph::edge(int u, int v) const {
  if (u == v) return false;
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<SimpleGraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (!g) {
      int count = 0;
      if (first != "n" || !(fields >> count) || count <= 0)
        fail(Errc::parse_error,
             "line " + std::to_string(line_no) + ": expected header 'n <count>'");
      std::string extra;
      if (fields >> extra)
        fail(Errc::parse_error, "line " + std::to_string(line_no) + ": trailing tokens");
      g.emplace(count);
      continue;
    }
    int u = 0, v = 0;
    std::istringstream edge_fields(line);
    std::string extra;
    if (!(edge_fields >> u >> v))
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": expected 'u v' edge");
    if (edge_fields >> extra)
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": trailing tokens");
    try {
      g->add_edge(u, v);
    } catch (const Error& e) {
      // what() starts with "<Name>: "; keep just the detail for rewrapping.
      std::string detail = e.what();
      detail.erase(0, std::string(errc_name(e.code())).size() + 2);
      fail(e.code(), "line " + std::to_string(line_no) + ": " + detail);
    }
  }
  if (!g) fail(Errc::parse_error, "missing 'n <count>' header");
  return *std::move(g);
}

SimpleGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

Hamiltonian reduce_to_mcp(const SimpleGraph& g) {
  const int n = g.n_vertices();
  std::vector<HamiltonianTerm> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    PauliString p = PauliString::identity(n);
    p.set_letter(i, 'Z');
    for (int j = i + 1; j < n; ++j)
      if (!g.edge(i, j)) p.set_letter(j, 'X');
    terms.push_back({1.0, p});
  }
  return Hamiltonian(n, terms);
}

namespace {

// Adjacency of vertex v as a bitmask over vertices 0..n-1.
std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n_vertices()), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  return adj;
}

// Branch-and-bound partition of the vertices into the fewest cliques,
// phrased as sequential assignment: vertex v may join a class only when
// adjacent to every member already in it.
struct CoverSearch {
  const std::vector<std::uint32_t>& adj;
  int n;
  std::vector<std::uint32_t> classes;
  int best;

  void run(int v) {
    if (static_cast<int>(classes.size()) >= best) return;
    if (v == n) {
      best = static_cast<int>(classes.size());
      return;
    }
    // Index-based: deeper calls push and pop classes, so references into
    // the vector would not survive the recursion.
    const std::size_t n_classes = classes.size();
    for (std::size_t c = 0; c < n_classes; ++c) {
      if ((classes[c] & ~adj[static_cast<std::size_t>(v)]) == 0) {
        classes[c] |= 1u << v;
        run(v + 1);
        classes[c] &= ~(1u << v);
      }
    }
    if (static_cast<int>(classes.size()) + 1 < best) {
      classes.push_back(1u << v);
      run(v + 1);
      classes.pop_back();
    }
  }
};

int exact_cover_masks(const std::vector<std::uint32_t>& adj, int n) {
  CoverSearch search{adj, n, {}, n + 1};
  search.run(0);
  return search.best;
}

// All maximal cliques of the subgraph induced by `universe`, restricted to
// those containing the lowest vertex of `universe` (enough for cover
// branching): Bron-Kerbosch with pivoting over bitmasks.
void maximal_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t r, std::uint32_t p,
                     std::uint32_t x, std::vector<std::uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint32_t best_mask = 0;
  int best_count = -1;
  for (std::uint32_t scan = p | x; scan != 0; scan &= scan - 1) {
    const int u = std::countr_zero(scan);
    const int count = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (count > best_count) {
      best_count = count;
      best_mask = adj[static_cast<std::size_t>(u)];
    }
  }
  std::uint32_t candidates = p & ~best_mask;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = 1u << v;
    maximal_cliques(adj, r | bit, p & adj[static_cast<std::size_t>(v)],
                    x & adj[static_cast<std::size_t>(v)], out);
    p &= ~bit;
    x |= bit;
    candidates &= ~bit;
  }
}

// Independent exact search: cover the remaining vertices by branching on
// every maximal clique (of the remaining induced subgraph) through the
// lowest uncovered vertex.
struct SetCoverSearch {
  const std::vector<std::uint32_t>& adj;
  int best;

  void run(std::uint32_t remaining, int used) {
    if (used >= best) return;
    if (remaining == 0) {
      best = used;
      return;
    }
    const int v = std::countr_zero(remaining);
    std::vector<std::uint32_t> cliques;
    maximal_cliques(adj, 1u << v, adj[static_cast<std::size_t>(v)] & remaining & ~(1u << v), 0,
                    cliques);
    for (std::uint32_t clique : cliques) run(remaining & ~clique, used + 1);
  }
};

int exact_cover_by_maximal_cliques(const std::vector<std::uint32_t>& adj, int n) {
  SetCoverSearch search{adj, n + 1};
  search.run(n == 32 ? ~0u : (1u << n) - 1u, 0);
  return search.best;
}

}  // namespace

int exact_clique_cover(const SimpleGraph& g) {
  if (g.n_vertices() > kExactLimit)
    fail(Errc::too_large, "exact clique cover limited to " + std::to_string(kExactLimit) +
                              " vertices");
  return exact_cover_masks(adjacency_masks(g), g.n_vertices());
}

bool cross_validate(const SimpleGraph& g) {
  if (g.n_vertices() > kExactLimit)
    fail(Errc::too_large, "cross-validation limited to " + std::to_string(kExactLimit) +
                              " vertices");
  const Hamiltonian h = reduce_to_mcp(g);
  const CommutationGraph qwc = build_graph(h, Mode::qwc);
  const CommutationGraph gc = build_graph(h, Mode::gc);

  // The constructed observables must commute exactly along the input edges,
  // and both commutativity notions must agree on them.
  for (int i = 0; i < g.n_vertices(); ++i) {
    for (int j = i + 1; j < g.n_vertices(); ++j) {
      const bool expected = g.edge(i, j);
      if (qwc.edge(i, j) != expected || gc.edge(i, j) != expected) return false;
    }
  }

  const auto adj = adjacency_masks(g);
  const int direct = exact_cover_masks(adj, g.n_vertices());

  // Rebuild adjacency from the commutation graph rather than reusing the
  // input, so the second search exercises the constructed observables.
  std::vector<std::uint32_t> commute_adj(static_cast<std::size_t>(g.n_vertices()), 0);
  for (int i = 0; i < g.n_vertices(); ++i)
    for (int j = 0; j < g.n_vertices(); ++j)
      if (i != j && gc.edge(i, j)) commute_adj[static_cast<std::size_t>(i)] |= 1u << j;
  const int via_observables =
      exact_cover_by_maximal_cliques(commute_adj, g.n_vertices());

  return direct == via_observables;
}

}  // namespace paulimc
