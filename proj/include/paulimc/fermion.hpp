#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulimc/partition.hpp"
#include "paulimc/pauli.hpp"

namespace paulimc {

enum class FermionKind { number, number_excitation, double_excitation };
enum class Encoding { jw, parity };

const char* encoding_name(Encoding e);
Encoding encoding_from_name(const std::string& name);

// A second-quantized Hamiltonian contribution over N fermionic modes:
//   number            a+_p a_p                  (occupation of mode p)
//   number_excitation a+_p a+_q a_p a_q         (equals -n_p n_q)
//   double_excitation a+_p a+_q a_r a_s, Hermitized. With symmetric=true
//     the operator is c(T + T+); with symmetric=false the conjugate enters
//     with a twisted weight, c[(1+i)T + (1-i)T+], which keeps the operator
//     Hermitian but stops the imaginary parts of the expansion cancelling,
//     doubling the emitted string count from 8 to 16.
// Factories canonicalize: index pairs are sorted descending (each swap of
// a creation or annihilation pair flips the coefficient sign) and the
// result must satisfy p > q (> r > s). Anything else is rejected with
// UnsupportedIndexPattern; out-of-range indices with IndexOutOfRange.
class FermionicTerm {
 public:
  static FermionicTerm number(double coeff, int p, int n_modes);
  static FermionicTerm number_excitation(double coeff, int p, int q, int n_modes);
  static FermionicTerm double_excitation(double coeff, int p, int q, int r, int s,
                                         int n_modes, bool symmetric = true);

  FermionKind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return coefficient_; }
  int n_modes() const noexcept { return n_modes_; }
  bool symmetric() const noexcept { return symmetric_; }
  // Valid entries: 1 for number, 2 for number_excitation, 4 for double.
  const std::array<int, 4>& indices() const noexcept { return idx_; }

 private:
  FermionicTerm() = default;

  FermionKind kind_ = FermionKind::number;
  double coefficient_ = 0.0;
  int n_modes_ = 0;
  bool symmetric_ = true;
  std::array<int, 4> idx_{-1, -1, -1, -1};
};

// Pauli expansion of one fermionic term. Identity components are folded
// into constant_offset instead of being emitted; the remaining terms carry
// real coefficients and are ordered by ascending letter string.
struct EncodedOperator {
  std::vector<HamiltonianTerm> terms;
  double constant_offset = 0.0;
};

// Jordan-Wigner: a_p -> (X_p + i Y_p)/2 * Z_(p-1)...Z_0.
EncodedOperator encode_jw(const FermionicTerm& t);

// Parity: a_p -> X_(N-1)...X_(p+1) * (X_p Z_(p-1) + i Y_p)/2. Double
// excitations require the separated regime p-1 > q, q-1 > r, r-1 > s and
// s >= 1; number/number-excitation need their lowest index >= 1. Outside
// that regime the string shape is unspecified, so it is rejected with
// UnsupportedIndexPattern rather than guessed at.
EncodedOperator encode_parity(const FermionicTerm& t);

// Simultaneously-measurable groups for one term, before assembly:
// double excitations split into two general-commuting families by total
// Y-count parity; number/number-excitation strings are all-I/Z and land
// in the qubit-wise-commuting pool.
struct EncodedGroup {
  std::vector<HamiltonianTerm> family_even;
  std::vector<HamiltonianTerm> family_odd;
  std::vector<HamiltonianTerm> qwc_pool;
  double constant_offset = 0.0;
};
EncodedGroup encode_group(const FermionicTerm& t, Encoding encoding);

// The assembled result of structurally partitioning a fermionic operator:
// the encoded Hamiltonian, a partition of its term indices, and the scalar
// offset collected from identity components.
struct StructuralPartition {
  Hamiltonian hamiltonian;
  PartitionSet partition;
  double constant_offset = 0.0;
};

// Builds measurement families directly from the term structure, with no
// pairwise commutation checks: one shared pool family for every all-I/Z
// string (first, when present), then per double-excitation term its
// even-Y family followed by its odd-Y family, in input-term order.
// A string emitted twice lands once, in the earliest family that produced
// it, with coefficients accumulated. Runtime is linear in the number of
// emitted strings.
StructuralPartition partition_structural(const std::vector<FermionicTerm>& terms,
                                         Encoding encoding);

// Text format: a "modes <N>" header, then one term per line:
//   N <coeff> <p>
//   NE <coeff> <p> <q>
//   DE <coeff> <p> <q> <r> <s>     (symmetric, 8 strings under JW)
//   DEA <coeff> <p> <q> <r> <s>    (asymmetric weights, 16 strings)
// '#' starts a comment.
std::vector<FermionicTerm> parse_fermion_file(std::istream& in);
std::vector<FermionicTerm> load_fermion_file(const std::string& path);

}  // namespace paulimc
