#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "paulimc/error.hpp"
#include "paulimc/graph.hpp"
#include "paulimc/partition.hpp"
#include "paulimc/pauli.hpp"
#include "paulimc/synth.hpp"
#include "paulimc/tableau.hpp"

using namespace paulimc;

namespace {

std::vector<PauliString> parse_family(const std::vector<std::string>& letters) {
  std::vector<PauliString> out;
  for (const auto& s : letters) out.push_back(PauliString::parse(s));
  return out;
}

// Signed all-Z string described by a readout rule.
PauliString z_string(int sign, const std::vector<int>& bits, int n) {
  std::string s(static_cast<std::size_t>(n), 'I');
  for (int b : bits) s[static_cast<std::size_t>(b)] = 'Z';
  PauliString p = PauliString::parse(s);
  return sign < 0 ? p.negated() : p;
}

// U P U+ computed with explicit matrices.
oracle::Mat dense_conjugation(const PauliString& p, const Circuit& c) {
  const oracle::Mat u = oracle::circuit_dense(c);
  return oracle::mul(oracle::mul(u, oracle::dense(p)), oracle::dagger(u));
}

bool family_is_qwc(const std::vector<PauliString>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!commutes_qwc(family[i], family[j])) return false;
  return true;
}

PauliString random_pauli(int n, std::mt19937_64& rng) {
  static const char kLetters[] = {'I', 'X', 'Y', 'Z'};
  std::string s;
  for (int i = 0; i < n; ++i) s += kLetters[rng() % 4];
  return PauliString::parse(s);
}

}  // namespace

TEST_CASE("basis extraction distills dependent members") {
  const auto family = parse_family({"XX", "YY", "ZZ"});
  const BasisExtraction ext = extract_basis(family);

  // YY = -XX*ZZ is dependent; the two Y-free strings win the scan.
  CHECK(ext.basis_member_indices == std::vector<int>{0, 2});
  REQUIRE(ext.tableau.n_columns() == 2);
  CHECK(ext.tableau.column(0).letters() == "XX");
  CHECK(ext.tableau.column(1).letters() == "ZZ");

  REQUIRE(ext.decompositions.size() == 3);
  CHECK(ext.decompositions[0].basis_indices == std::vector<int>{0});
  CHECK(ext.decompositions[0].sign == 1);
  CHECK(ext.decompositions[1].basis_indices == std::vector<int>{0, 1});
  CHECK(ext.decompositions[1].sign == -1);  // XX*ZZ = -YY
  CHECK(ext.decompositions[2].basis_indices == std::vector<int>{1});
  CHECK(ext.decompositions[2].sign == 1);

  // Each decomposition reproduces its member exactly.
  for (std::size_t m = 0; m < family.size(); ++m) {
    PauliString prod = PauliString::parse("II");
    for (int b : ext.decompositions[m].basis_indices) {
      prod = multiply(prod, ext.tableau.column(b));
    }
    if (ext.decompositions[m].sign < 0) prod = prod.negated();
    CHECK(prod == family[m]);
  }
}

TEST_CASE("basis extraction edge cases and tableau validation") {
  const BasisExtraction single = extract_basis(parse_family({"ZZ"}));
  CHECK(single.basis_member_indices == std::vector<int>{0});
  CHECK(single.decompositions[0].basis_indices == std::vector<int>{0});
  CHECK(single.decompositions[0].sign == 1);

  CHECK_THROWS_AS(extract_basis({}), Error);
  CHECK_THROWS_WITH_AS(extract_basis(parse_family({"XX", "ZI"})),
                       doctest::Contains("NotCommuting"), Error);

  CHECK_THROWS_AS(StabilizerTableau::from_columns({}), Error);
  CHECK_THROWS_WITH_AS(
      StabilizerTableau::from_columns(parse_family({"XX", "ZI"})),
      doctest::Contains("NotCommuting"), Error);
  // Three columns on two qubits can never be independent.
  CHECK_THROWS_WITH_AS(
      StabilizerTableau::from_columns(parse_family({"XX", "YY", "ZZ"})),
      doctest::Contains("RankDeficiency"), Error);
  // Dependence detected by elimination, not just by counting.
  CHECK_THROWS_WITH_AS(
      StabilizerTableau::from_columns(parse_family({"XXI", "ZZI", "YYI"})),
      doctest::Contains("RankDeficiency"), Error);
  CHECK_THROWS_WITH_AS(
      StabilizerTableau::from_columns(parse_family({"XX", "ZZI"})),
      doctest::Contains("LengthMismatch"), Error);
}

TEST_CASE("gate conjugation matches explicit matrices") {
  std::mt19937_64 rng(11);
  const int n = 3;
  for (int trial = 0; trial < 60; ++trial) {
    PauliString p = random_pauli(n, rng);
    if (rng() % 2) p = p.negated();
    const int a = static_cast<int>(rng() % n);
    int b = static_cast<int>(rng() % n);
    while (b == a) b = static_cast<int>(rng() % n);
    const std::vector<Gate> gates = {Gate::h(a), Gate::s(a), Gate::cnot(a, b),
                                     Gate::cz(a, b), Gate::swap(a, b)};
    for (const Gate& g : gates) {
      CAPTURE(p.signed_str());
      CAPTURE(gate_to_text(g));
      const PauliString image = conjugate(p, g);
      const oracle::Mat u = oracle::gate_dense(g, n);
      const oracle::Mat lhs = oracle::mul(oracle::mul(u, oracle::dense(p)), oracle::dagger(u));
      CHECK(oracle::approx_eq(lhs, oracle::dense(image)));
    }
  }
}

TEST_CASE("tableau apply agrees with per-column conjugation") {
  const auto family = parse_family({"IYX", "ZZZ", "XIX"});
  StabilizerTableau t = StabilizerTableau::from_columns(family);
  const std::vector<Gate> gates = {Gate::h(0), Gate::cnot(1, 2), Gate::swap(0, 1),
                                   Gate::s(2), Gate::cz(0, 2), Gate::h(1)};
  Circuit c;
  c.n_qubits = 3;
  for (const Gate& g : gates) {
    t.apply(g);
    c.gates.push_back(g);
  }
  for (int j = 0; j < t.n_columns(); ++j) {
    CHECK(t.column(j) == conjugate_through(family[static_cast<std::size_t>(j)], c));
  }
}

TEST_CASE("synthesis walks the staged elimination on the three-qubit family") {
  const auto family = parse_family({"IYX", "ZZZ", "XIX", "ZXY"});
  const BasisExtraction ext = extract_basis(family);
  CHECK(ext.basis_member_indices == std::vector<int>{0, 1, 2});
  CHECK(ext.decompositions[3].basis_indices == std::vector<int>{0, 1});
  CHECK(ext.decompositions[3].sign == 1);  // IYX*ZZZ = +ZXY

  std::vector<TableauSnapshot> trace;
  const SynthesisResult synth = synthesize(ext.tableau, &trace);
  CHECK_FALSE(synth.rotation_only);
  CHECK(synth.pivot_qubits == std::vector<int>{0, 1, 2});

  const std::vector<Gate> expected = {
      Gate::h(0),    Gate::cnot(1, 2), Gate::swap(0, 1), Gate::s(0),
      Gate::cz(1, 2), Gate::h(0),      Gate::h(1),       Gate::h(2)};
  CHECK(synth.circuit.gates == expected);
  CHECK(synth.circuit.n_qubits == 3);
  CHECK(synth.circuit.measured_qubits == std::vector<int>{0, 1, 2});
  CHECK(synth.circuit.entangling_gate_count() == 3);  // CNOT, SWAP, CZ

  // Bit-matrix milestones: initial, X-rank H, each CNOT/SWAP, S/CZ, H layer.
  const std::vector<TableauSnapshot> expected_trace = {
      {{0, 1, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}},
      {{0, 0, 1}, {1, 1, 0}, {0, 1, 0}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}},
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}},
      {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
  REQUIRE(trace.size() == expected_trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    CAPTURE(i);
    CHECK(trace[i] == expected_trace[i]);
  }
  CHECK(synth.final_tableau.snapshot() == expected_trace.back());
  CHECK(synth.final_tableau.column(0).signed_str() == "-ZII");
  CHECK(synth.final_tableau.column(1).signed_str() == "+IZI");
  CHECK(synth.final_tableau.column(2).signed_str() == "+IIZ");
}

TEST_CASE("measurement map composes readout rules for the three-qubit family") {
  const auto family = parse_family({"IYX", "ZZZ", "XIX", "ZXY"});
  const BasisExtraction ext = extract_basis(family);
  const SynthesisResult synth = synthesize(ext.tableau);
  const MeasurementMap map = build_measurement_map(family, ext, synth);

  CHECK(map.n_qubits == 3);
  CHECK(map.measured_qubits == std::vector<int>{0, 1, 2});
  REQUIRE(map.members.size() == 4);
  const std::vector<int> signs = {-1, 1, 1, -1};
  const std::vector<std::vector<int>> bits = {{0}, {1}, {2}, {0, 1}};
  for (std::size_t m = 0; m < map.members.size(); ++m) {
    CAPTURE(m);
    CHECK(map.members[m].member == family[m].letters());
    CHECK(map.members[m].sign == signs[m]);
    CHECK(map.members[m].bits == bits[m]);
  }

  // The circuit really sends each member to its signed Z-string.
  for (std::size_t m = 0; m < family.size(); ++m) {
    const PauliString image = z_string(map.members[m].sign, map.members[m].bits, 3);
    CHECK(conjugate_through(family[m], synth.circuit) == image);
    CHECK(oracle::approx_eq(dense_conjugation(family[m], synth.circuit),
                            oracle::dense(image)));
  }
}

TEST_CASE("swap elision relabels wires without changing outcomes") {
  const auto family = parse_family({"IYX", "ZZZ", "XIX", "ZXY"});
  const BasisExtraction ext = extract_basis(family);
  const SynthesisResult synth = synthesize(ext.tableau);
  const MeasurementMap map = build_measurement_map(family, ext, synth);
  const auto [elided, emap] = elide_swaps(synth.circuit, map);

  const std::vector<Gate> expected = {Gate::h(0), Gate::cnot(1, 2), Gate::s(1),
                                      Gate::cz(0, 2), Gate::h(1), Gate::h(0),
                                      Gate::h(2)};
  CHECK(elided.gates == expected);
  CHECK(elided.measured_qubits == std::vector<int>{0, 1, 2});
  CHECK(emap.measured_qubits == std::vector<int>{0, 1, 2});

  const std::vector<int> signs = {-1, 1, 1, -1};
  const std::vector<std::vector<int>> bits = {{1}, {0}, {2}, {0, 1}};
  REQUIRE(emap.members.size() == 4);
  for (std::size_t m = 0; m < emap.members.size(); ++m) {
    CAPTURE(m);
    CHECK(emap.members[m].sign == signs[m]);
    CHECK(emap.members[m].bits == bits[m]);
    // Conjugation through the swap-free circuit lands on the new labels.
    const PauliString image = z_string(signs[m], bits[m], 3);
    CHECK(conjugate_through(family[m], elided) == image);
    CHECK(oracle::approx_eq(dense_conjugation(family[m], elided),
                            oracle::dense(image)));
  }
}

TEST_CASE("qubit-wise commuting families synthesize as basis rotations") {
  const auto family = parse_family({"XY", "XI", "IY"});
  const BasisExtraction ext = extract_basis(family);
  const SynthesisResult synth = synthesize(ext.tableau);
  CHECK(synth.rotation_only);
  CHECK(synth.circuit.entangling_gate_count() == 0);
  CHECK(synth.circuit.gates ==
        std::vector<Gate>{Gate::h(0), Gate::s(1), Gate::h(1)});
  CHECK(synth.circuit.measured_qubits == std::vector<int>{0, 1});

  const MeasurementMap map = build_measurement_map(family, ext, synth);
  const std::vector<int> signs = {-1, 1, -1};  // each Y picks up a sign under S;H
  const std::vector<std::vector<int>> bits = {{0, 1}, {0}, {1}};
  for (std::size_t m = 0; m < family.size(); ++m) {
    CAPTURE(m);
    CHECK(map.members[m].sign == signs[m]);
    CHECK(map.members[m].bits == bits[m]);
    const PauliString image = z_string(signs[m], bits[m], 2);
    CHECK(conjugate_through(family[m], synth.circuit) == image);
    CHECK(oracle::approx_eq(dense_conjugation(family[m], synth.circuit),
                            oracle::dense(image)));
  }
}

TEST_CASE("measurement map JSON round trip and validation") {
  const auto family = parse_family({"IYX", "ZZZ", "XIX", "ZXY"});
  const BasisExtraction ext = extract_basis(family);
  const SynthesisResult synth = synthesize(ext.tableau);
  const MeasurementMap map = build_measurement_map(family, ext, synth);

  const std::string text = map_to_json(map);
  const MeasurementMap back = map_from_json(text);
  CHECK(back.n_qubits == map.n_qubits);
  CHECK(back.measured_qubits == map.measured_qubits);
  REQUIRE(back.members.size() == map.members.size());
  for (std::size_t m = 0; m < map.members.size(); ++m) {
    CHECK(back.members[m].member == map.members[m].member);
    CHECK(back.members[m].sign == map.members[m].sign);
    CHECK(back.members[m].bits == map.members[m].bits);
  }

  std::string tampered = text;
  const auto pos = tampered.find("\"sign\": -1");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 10, "\"sign\": -3");
  CHECK_THROWS_WITH_AS(map_from_json(tampered), doctest::Contains("sign"), Error);
  CHECK_THROWS_WITH_AS(map_from_json("{"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_AS(map_from_json("{\"n_qubits\": 2}"), Error);
}

TEST_CASE("synthesis fuzzing over random commuting families") {
  std::mt19937_64 rng(2024);
  int checked_families = 0;
  int qwc_families = 0;
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5 qubits
    std::vector<HamiltonianTerm> terms;
    while (terms.size() < 10) {
      const PauliString p = random_pauli(n, rng);
      if (p.letters() == std::string(static_cast<std::size_t>(n), 'I')) continue;
      bool dup = false;
      for (const auto& t : terms) dup = dup || t.pauli == p;
      if (dup) continue;
      terms.push_back({1.0, p});
    }
    const Hamiltonian h(n, terms);
    const CommutationGraph g = build_graph(h, Mode::gc);
    const PartitionSet parts = partition_greedy(g);
    for (const auto& fam : parts.families) {
      if (fam.size() < 2) continue;
      std::vector<PauliString> family;
      for (int idx : fam) family.push_back(h.term(idx).pauli);
      ++checked_families;

      const BasisExtraction ext = extract_basis(family);
      const SynthesisResult synth = synthesize(ext.tableau);
      const MeasurementMap map = build_measurement_map(family, ext, synth);
      CHECK(static_cast<int>(synth.circuit.gates.size()) <= 4 * n * n);

      if (family_is_qwc(family)) {
        ++qwc_families;
        CHECK(synth.rotation_only);
        CHECK(synth.circuit.entangling_gate_count() == 0);
      }

      // Final tableau = conjugation of each basis column through the circuit.
      for (int j = 0; j < ext.tableau.n_columns(); ++j) {
        CHECK(synth.final_tableau.column(j) ==
              conjugate_through(ext.tableau.column(j), synth.circuit));
      }

      // Every member lands on the signed Z-string its readout rule claims,
      // both before and after swap elision.
      const auto [elided, emap] = elide_swaps(synth.circuit, map);
      for (const Gate& gate : elided.gates) CHECK(gate.kind != Gate::Kind::swap);
      for (std::size_t m = 0; m < family.size(); ++m) {
        const auto& r = map.members[m];
        CHECK(conjugate_through(family[m], synth.circuit) ==
              z_string(r.sign, r.bits, n));
        for (int b : r.bits) {
          CHECK(std::find(synth.circuit.measured_qubits.begin(),
                          synth.circuit.measured_qubits.end(),
                          b) != synth.circuit.measured_qubits.end());
        }
        const auto& er = emap.members[m];
        CHECK(conjugate_through(family[m], elided) == z_string(er.sign, er.bits, n));
        CHECK(er.sign == r.sign);
      }
    }
  }
  // The fuzz loop actually exercised both paths.
  CHECK(checked_families > 50);
  CHECK(qwc_families > 0);
}
