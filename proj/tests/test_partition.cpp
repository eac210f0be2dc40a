#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "paulimc/error.hpp"
#include "paulimc/graph.hpp"
#include "paulimc/partition.hpp"
#include "paulimc/pauli.hpp"

using namespace paulimc;

namespace {

Hamiltonian four_term() { return Hamiltonian::parse_text("1 IZ\n1 ZI\n1 XX\n1 YY\n"); }

Hamiltonian all_two_qubit() {
  std::string text;
  for (const char* s : {"IX", "IY", "IZ", "XI", "XX", "XY", "XZ", "YI", "YX", "YY", "YZ", "ZI",
                        "ZX", "ZY", "ZZ"})
    text += std::string("1 ") + s + "\n";
  return Hamiltonian::parse_text(text);
}

CommutationGraph random_graph(int n, double p, std::mt19937_64& rng) {
  CommutationGraph g(n, Mode::gc);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

std::vector<std::uint32_t> adjacency_of(const CommutationGraph& g) {
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n_vertices()), 0);
  for (int u = 0; u < g.n_vertices(); ++u)
    for (int v = 0; v < g.n_vertices(); ++v)
      if (u != v && g.edge(u, v)) adj[static_cast<std::size_t>(u)] |= 1u << v;
  return adj;
}

// Families must be cliques of g and cover every vertex once.
void check_valid_cover(const PartitionSet& p, const CommutationGraph& g) {
  std::set<int> seen;
  for (const auto& family : p.families) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      CHECK(seen.insert(family[i]).second);
      for (std::size_t j = i + 1; j < family.size(); ++j) CHECK(g.edge(family[i], family[j]));
    }
  }
  CHECK(static_cast<int>(seen.size()) == g.n_vertices());
}

}  // namespace

TEST_CASE("naive partitioning is one singleton per term") {
  const PartitionSet p = partition_naive(four_term());
  CHECK(p.mode == Mode::naive);
  CHECK(p.num_partitions() == 4);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(p.families[static_cast<std::size_t>(i)].size() == 1);
    CHECK(p.families[static_cast<std::size_t>(i)][0] == i);
  }
}

TEST_CASE("four-term instance: gc gives 2 families, qwc gives 3") {
  const Hamiltonian h = four_term();
  for (const bool use_bk : {false, true}) {
    CAPTURE(use_bk);
    const CommutationGraph gc = build_graph(h, Mode::gc);
    const PartitionSet p =
        use_bk ? partition_bron_kerbosch(gc) : partition_greedy(gc);
    CHECK(p.num_partitions() == 2);
    check_valid_cover(p, gc);
    CHECK(verify_partition(p, h).ok);

    const CommutationGraph qwc = build_graph(h, Mode::qwc);
    const PartitionSet q =
        use_bk ? partition_bron_kerbosch(qwc) : partition_greedy(qwc);
    CHECK(q.num_partitions() == 3);
    check_valid_cover(q, qwc);
  }
}

TEST_CASE("all fifteen two-qubit strings split into five mutually unbiased triples") {
  const Hamiltonian h = all_two_qubit();
  const CommutationGraph g = build_graph(h, Mode::gc);
  const PartitionSet p = partition_bron_kerbosch(g);
  REQUIRE(p.num_partitions() == 5);
  std::vector<std::set<std::string>> families;
  for (const auto& family : p.families) {
    CHECK(family.size() == 3);
    std::set<std::string> strings;
    for (int idx : family) strings.insert(h.term(idx).pauli.letters());
    families.push_back(std::move(strings));
  }
  // The cover is exactly the five commuting triples.
  const std::vector<std::set<std::string>> expected = {
      {"IX", "XI", "XX"}, {"IY", "YI", "YY"}, {"IZ", "ZI", "ZZ"},
      {"XY", "YZ", "ZX"}, {"XZ", "YX", "ZY"}};
  for (const auto& family : expected)
    CHECK(std::find(families.begin(), families.end(), family) != families.end());
  CHECK(verify_partition(p, h).ok);
}

TEST_CASE("greedy and exact search produce valid covers on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const CommutationGraph g = random_graph(n, 0.5, rng);
    const PartitionSet greedy = partition_greedy(g);
    const PartitionSet bk = partition_bron_kerbosch(g);
    check_valid_cover(greedy, g);
    check_valid_cover(bk, g);
    // Both heuristics upper-bound the exact optimum; neither dominates the
    // other in general.
    const int optimum = oracle::min_clique_cover_dp(adjacency_of(g));
    CHECK(bk.num_partitions() >= optimum);
    CHECK(greedy.num_partitions() >= optimum);
  }
}

TEST_CASE("partitioners are deterministic") {
  const Hamiltonian h = all_two_qubit();
  const CommutationGraph g = build_graph(h, Mode::gc);
  const PartitionSet a = partition_greedy(g);
  const PartitionSet b = partition_greedy(g);
  CHECK(a.families == b.families);
  const PartitionSet c = partition_bron_kerbosch(g);
  const PartitionSet d = partition_bron_kerbosch(g);
  CHECK(c.families == d.families);
}

TEST_CASE("exact search rejects oversized instances") {
  CommutationGraph g(301, Mode::gc);
  CHECK_THROWS_WITH_AS(partition_bron_kerbosch(g), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("partition verification catches tampering") {
  const Hamiltonian h = four_term();

  PartitionSet good;
  good.mode = Mode::gc;
  good.n_terms = 4;
  good.families = {{0, 1}, {2, 3}};
  CHECK(verify_partition(good, h).ok);

  SUBCASE("non-commuting members") {
    PartitionSet bad = good;
    bad.families = {{0, 2}, {1, 3}};  // IZ with XX
    const VerifyResult r = verify_partition(bad, h);
    CHECK_FALSE(r.ok);
    CHECK(r.detail.find("not") != std::string::npos);
  }
  SUBCASE("missing term") {
    PartitionSet bad = good;
    bad.families = {{0, 1}, {2}};
    CHECK_FALSE(verify_partition(bad, h).ok);
  }
  SUBCASE("duplicated term") {
    PartitionSet bad = good;
    bad.families = {{0, 1}, {2, 3}, {3}};
    CHECK_FALSE(verify_partition(bad, h).ok);
  }
  SUBCASE("qwc notion rejects gc-only family") {
    PartitionSet bad = good;
    bad.mode = Mode::qwc;
    CHECK_FALSE(verify_partition(bad, h).ok);  // XX,YY are not qubit-wise compatible
  }
  SUBCASE("naive family must be singleton") {
    PartitionSet bad = good;
    bad.mode = Mode::naive;
    CHECK_FALSE(verify_partition(bad, h).ok);
  }
}

TEST_CASE("report json round trip and validation") {
  const Hamiltonian h = four_term();
  const CommutationGraph g = build_graph(h, Mode::gc);
  const PartitionReport report = make_report(partition_greedy(g), h, "greedy", 1.25);

  const std::string json = report_to_json(report);
  const PartitionReport back = report_from_json(json);
  CHECK(back.partition.mode == report.partition.mode);
  CHECK(back.partition.families == report.partition.families);
  CHECK(back.algorithm == "greedy");
  CHECK(back.family_strings == report.family_strings);
  CHECK(back.wall_time_ms == doctest::Approx(1.25));

  CHECK_THROWS_WITH_AS(report_from_json("{"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(report_from_json("{\"format_version\": 2}"), Error);

  // An index outside n_terms is structurally inconsistent and must be
  // rejected at parse time.
  std::string tampered = json;
  const auto pos = tampered.find("\"n_terms\": 4");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 12, "\"n_terms\": 2");
  CHECK_THROWS_AS(report_from_json(tampered), Error);
}
