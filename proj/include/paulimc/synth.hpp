#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paulimc/tableau.hpp"

namespace paulimc {

// How one family member is rebuilt from basis members: the member equals
// sign * product of the basis columns listed in basis_indices (positions
// into the extraction's basis_member_indices, ascending).
struct Decomposition {
  std::vector<int> basis_indices;
  int sign = 1;
};

struct BasisExtraction {
  StabilizerTableau tableau;             // basis members as columns
  std::vector<int> basis_member_indices; // family positions, ascending
  std::vector<Decomposition> decompositions;  // one per family member
};

// Distills a pairwise-commuting family into r <= N independent columns by
// GF(2) elimination over the symplectic vectors. Candidates are scanned
// by ascending Y-count (ties by family position), which keeps the basis
// as diagonalization-friendly as possible; the chosen columns are then
// reordered by family position. Each member's decomposition over the
// basis is solved exactly, with the sign coming from the actual Pauli
// product of the chosen columns.
BasisExtraction extract_basis(const std::vector<PauliString>& family);

// Z-block over X-block bit matrix, as produced by StabilizerTableau::snapshot.
using TableauSnapshot = std::vector<std::vector<std::uint8_t>>;

struct SynthesisResult {
  Circuit circuit;
  StabilizerTableau final_tableau;
  std::vector<int> pivot_qubits;  // rows carrying the single-Z images
  bool rotation_only = false;     // qubit-wise path, no entangling gates
};

// Builds the Clifford circuit that maps every tableau column to a single-Z
// string, so one computational-basis readout measures the whole family.
//
// A pairwise qubit-wise-commuting tableau short-circuits to per-qubit
// basis rotations (X: H; Y: S then H; Z/I: nothing) and measures the
// union of the column supports. Otherwise the staged elimination runs:
//   1. make the X-block full column rank with H gates (lowest qubit that
//      raises the rank first),
//   2. Gaussian-eliminate the X-block to the identity with CNOTs, moving
//      each pivot into place with a SWAP when needed,
//   3. clear the Z-block diagonal with S and the off-diagonal with CZ,
//   4. a final H layer on the pivot qubits turns X-identity into Z-identity.
// When trace is non-null it receives the bit-matrix snapshots: initial,
// after step 1, after every CNOT and SWAP of step 2, after step 3, after
// step 4 (the rotation path records just initial and final).
SynthesisResult synthesize(const StabilizerTableau& tableau,
                           std::vector<TableauSnapshot>* trace = nullptr);

// Per-member readout rule: outcome = sign * product over bits of the
// +/-1 value read on that qubit.
struct MemberReadout {
  std::string member;           // letters
  int sign = 1;
  std::vector<int> bits;        // measured qubit indices, ascending
  std::vector<int> basis_indices;
};

struct MeasurementMap {
  int n_qubits = 0;
  std::vector<int> measured_qubits;
  std::vector<MemberReadout> members;  // family order
};

// Conjugates each basis member through the synthesized circuit gate by
// gate (independently of the tableau state), checks the image is a signed
// all-I/Z string, and composes member readouts through the decomposition:
// signs multiply and bit supports cancel pairwise. The direct conjugation
// of every member is checked against the composed result.
MeasurementMap build_measurement_map(const std::vector<PauliString>& family,
                                     const BasisExtraction& basis,
                                     const SynthesisResult& synth);

// Removes every SWAP by relabeling later gate operands and the map's bit
// supports through the accumulated wire permutation. Outcomes are
// unchanged; only labels move.
std::pair<Circuit, MeasurementMap> elide_swaps(const Circuit& circuit,
                                               const MeasurementMap& map);

std::string map_to_json(const MeasurementMap& map);
MeasurementMap map_from_json(const std::string& json_text);
MeasurementMap load_map(const std::string& path);

}  // namespace paulimc
