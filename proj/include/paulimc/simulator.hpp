#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulimc/synth.hpp"
#include "paulimc/tableau.hpp"

namespace paulimc {

// Dense statevector over at most 16 qubits. Qubit 0 is the most
// significant bit of the amplitude index, matching the leftmost letter of
// a Pauli string: |01> is index 1 on two qubits.
class StateVector {
 public:
  static constexpr int kMaxQubits = 16;

  static StateVector computational_basis(int n_qubits, std::uint64_t index);
  static StateVector from_amplitudes(int n_qubits,
                                     std::vector<std::complex<double>> amplitudes);

  // Amplitudes drawn as independent standard complex Gaussians, then
  // normalized: the uniform (Haar) distribution over pure states. The
  // Gaussians come from a fixed Box-Muller transform over std::mt19937_64
  // so identical seeds give identical states on every platform.
  static StateVector haar_random(int n_qubits, std::uint64_t seed);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<std::complex<double>>& amplitudes() const noexcept { return amps_; }

  void apply(const Gate& g);

  // Exact <psi|P|psi>, including P's sign. Always real for Hermitian P.
  double expectation(const PauliString& p) const;

  double norm() const;

  // Amplitude file: "qubits <N>" header then 2^N lines "<re> <im>" in
  // index order.
  static StateVector parse(std::istream& in);
  static StateVector load(const std::string& path);
  std::string to_text() const;

 private:
  StateVector() = default;

  int n_qubits_ = 0;
  std::vector<std::complex<double>> amps_;
};

// Runs every gate in order on a copy. Throws QubitCountMismatch.
StateVector apply_circuit(const StateVector& state, const Circuit& c);

// Computational-basis samples of the rotated state, folded through the
// measurement map: column m holds the +/-1 outcome of family member m for
// each shot. Sampling uses std::mt19937_64(seed) mapped to uniform [0,1)
// via (x >> 11) * 2^-53 and an inverse-CDF walk over the cumulative
// probabilities in index order, so tables reproduce bit-exactly per seed.
struct OutcomeTable {
  std::vector<std::string> labels;          // member letters
  std::vector<std::vector<std::int8_t>> columns;  // [member][shot], +/-1
  int shots = 0;
};

OutcomeTable sample_outcomes(const StateVector& state, const Circuit& circuit,
                             const MeasurementMap& map, int shots,
                             std::uint64_t seed);

// One row per shot, one column per member, header row of labels.
std::string outcomes_to_csv(const OutcomeTable& table);

}  // namespace paulimc
