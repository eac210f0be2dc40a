#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "paulimc/graph.hpp"
#include "paulimc/pauli.hpp"

namespace paulimc {

// A disjoint cover of term indices {0..n_terms-1}. Every family is sorted
// ascending; families appear in the order the producing algorithm emitted
// them. mode records which compatibility notion the families satisfy.
struct PartitionSet {
  Mode mode = Mode::naive;
  int n_terms = 0;
  std::vector<std::vector<int>> families;

  int num_partitions() const noexcept { return static_cast<int>(families.size()); }
};

// One singleton family per term, in term order.
PartitionSet partition_naive(const Hamiltonian& h);

// Greedy clique removal. Seed each family with the unassigned vertex of
// highest residual degree (degree counted among unassigned vertices only),
// then grow by repeatedly adding the candidate adjacent to everything in
// the family that keeps the most candidates alive. All ties break toward
// the lowest vertex index, which makes the output deterministic.
PartitionSet partition_greedy(const CommutationGraph& g);

// Repeated exact maximum cliques via Bron-Kerbosch with pivoting: find a
// maximum clique of the residual graph, emit it, remove it, repeat.
// The pivot is the vertex of P union X with the most neighbours in P and
// candidates are scanned in ascending order, so results are deterministic.
// Exponential in the worst case; inputs over max_vertices are rejected
// with TooLarge.
PartitionSet partition_bron_kerbosch(const CommutationGraph& g,
                                     int max_vertices = 300);

struct VerifyResult {
  bool ok = true;
  std::string detail;  // first violation when !ok
  explicit operator bool() const noexcept { return ok; }
};

// Independent validity check: families form a disjoint cover of the term
// indices and every in-family pair satisfies the partition's own mode
// predicate (naive requires singletons). Walks all pairs directly.
VerifyResult verify_partition(const PartitionSet& p, const Hamiltonian& h);

// JSON report wrapper for CLI output and round-tripping between the
// partition, synthesize, verify and stats subcommands.
struct PartitionReport {
  PartitionSet partition;
  std::string algorithm;
  std::vector<std::vector<std::string>> family_strings;
  double wall_time_ms = 0.0;
};

PartitionReport make_report(const PartitionSet& p, const Hamiltonian& h,
                            const std::string& algorithm, double wall_time_ms);
std::string report_to_json(const PartitionReport& report);
PartitionReport report_from_json(const std::string& json_text);
PartitionReport load_report(const std::string& path);

}  // namespace paulimc
