#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulimc/pauli.hpp"

namespace paulimc {

struct Gate {
  enum class Kind { h, s, cnot, cz, swap };

  Kind kind;
  int q0 = -1;
  int q1 = -1;  // -1 for single-qubit gates

  static Gate h(int q) { return {Kind::h, q, -1}; }
  static Gate s(int q) { return {Kind::s, q, -1}; }
  static Gate cnot(int control, int target) { return {Kind::cnot, control, target}; }
  static Gate cz(int a, int b) { return {Kind::cz, a, b}; }
  static Gate swap(int a, int b) { return {Kind::swap, a, b}; }

  bool operator==(const Gate&) const = default;
};

std::string gate_to_text(const Gate& g);

// An ordered Clifford gate list plus the qubits whose computational-basis
// readout carries the measurement result.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::vector<int> measured_qubits;  // ascending

  int entangling_gate_count() const;

  // Text format: "qubits <N>" header, one gate per line (H/S/CNOT/CZ/SWAP),
  // then one "MEASURE <q>" line per measured qubit.
  std::string to_text() const;
  static Circuit parse(std::istream& in);
  static Circuit parse_text(const std::string& text);
  static Circuit load(const std::string& path);
};

// Conjugation action P -> G P G+ of one Clifford gate on a signed Pauli.
// The letter action is the usual tableau update; the sign flips exactly
// when the conjugated letters pick up a -1 (e.g. H: Y -> -Y). The result
// of conjugating a Hermitian Pauli is always +/-1 signed, never imaginary.
PauliString conjugate(const PauliString& p, const Gate& g);

// Applies every gate of the circuit in order.
PauliString conjugate_through(PauliString p, const Circuit& c);

// k <= N signed Pauli strings as the columns of a 2N-bit matrix: rows
// 0..N-1 hold the Z bits, rows N..2N-1 the X bits. Columns must be
// GF(2)-independent and pairwise commuting (general commutation).
class StabilizerTableau {
 public:
  // Empty placeholder; every populated tableau comes from from_columns.
  StabilizerTableau() = default;

  static StabilizerTableau from_columns(std::vector<PauliString> columns);

  int n_qubits() const noexcept { return n_qubits_; }
  int n_columns() const noexcept { return static_cast<int>(cols_.size()); }
  const PauliString& column(int j) const { return cols_.at(static_cast<std::size_t>(j)); }
  const std::vector<PauliString>& columns() const noexcept { return cols_; }

  void apply(const Gate& g);

  // 2N x k bit matrix (Z-block over X-block).
  std::vector<std::vector<std::uint8_t>> snapshot() const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliString> cols_;
};

}  // namespace paulimc
