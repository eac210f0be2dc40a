#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace paulimc {

// An N-qubit Pauli operator with a +/-1 sign, stored in symplectic form:
// per qubit a (z, x) bit pair with I=(0,0), Z=(1,0), X=(0,1), Y=(1,1).
// Qubit 0 is the leftmost letter of the text form. Bits are packed into
// 64-bit words so the commutation predicates are word-parallel.
class PauliString {
 public:
  PauliString() = default;

  static PauliString identity(int n_qubits);

  // Parses a bare letter string such as "XIZY". The result always has
  // sign +1. Throws InvalidCharacter / EmptyString.
  static PauliString parse(std::string_view text);

  // Builds directly from packed words; vectors must hold ceil(n/64) words
  // with no bits set at or above position n.
  static PauliString from_bits(int n_qubits, std::vector<std::uint64_t> z,
                               std::vector<std::uint64_t> x, int sign = 1);

  int n_qubits() const noexcept { return n_qubits_; }
  int sign() const noexcept { return sign_; }

  PauliString with_sign(int sign) const;
  PauliString negated() const { return with_sign(-sign_); }

  bool z_bit(int qubit) const;
  bool x_bit(int qubit) const;
  void set_letter(int qubit, char letter);

  char letter(int qubit) const;
  std::string letters() const;
  // Letters with a +/- prefix, e.g. "-XX".
  std::string signed_str() const;

  bool is_identity() const noexcept;
  // True when every letter is I or Z.
  bool is_diagonal() const noexcept;
  int weight() const noexcept;   // number of non-identity letters
  int y_count() const noexcept;  // number of Y letters

  const std::vector<std::uint64_t>& z_words() const noexcept { return z_; }
  const std::vector<std::uint64_t>& x_words() const noexcept { return x_; }

  // Equality includes the sign.
  bool operator==(const PauliString& other) const = default;

  // Ignores signs; used to key Hamiltonian terms by letters.
  bool same_letters(const PauliString& other) const;

 private:
  friend class StabilizerTableau;
  friend PauliString conjugate(const PauliString&, const struct Gate&);

  void flip_sign() { sign_ = -sign_; }

  int n_qubits_ = 0;
  int sign_ = 1;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint64_t> x_;
};

// Qubit-wise commutation: on every qubit the letters are equal or one is I.
bool commutes_qwc(const PauliString& a, const PauliString& b);

// General commutation: the number of qubit positions where the letters
// differ and are both non-identity is even.
bool commutes_gc(const PauliString& a, const PauliString& b);

// Global counters for the commutation predicates, used by tests to show
// that the structural partitioner never evaluates them pairwise.
std::uint64_t predicate_call_count() noexcept;
void reset_predicate_call_count() noexcept;

// Product of two Pauli strings. The result of multiplying Hermitian Pauli
// strings is i^t * C for a Pauli string C; when t is odd the product is
// anti-Hermitian and multiply() throws NonHermitianProduct. Signs of the
// operands are folded into the result.
PauliString multiply(const PauliString& a, const PauliString& b);

// Letters-only product with the full phase: a * b = i^phase_exp * pauli,
// where the operand signs are already folded into phase_exp (sign -1
// contributes 2). pauli always has sign +1. phase_exp is in {0,1,2,3}.
struct PhasedProduct {
  PauliString pauli;
  int phase_exp;
};
PhasedProduct multiply_phased(const PauliString& a, const PauliString& b);

struct HamiltonianTerm {
  double coefficient;
  PauliString pauli;  // sign is always +1; signs live in the coefficient
};

// A real linear combination of Pauli strings, all of the same width, with
// no duplicate letter strings. Parsing and construction merge duplicates
// (first occurrence keeps its position) and fold Pauli signs into the
// coefficients. Zero coefficients are kept: the term list shape is part
// of downstream partition indices.
class Hamiltonian {
 public:
  Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms);

  // Text format: one "<coefficient> <letters>" per line, '#' comments and
  // blank lines ignored. Throws ParseError with a line number.
  static Hamiltonian parse(std::istream& in);
  static Hamiltonian parse_text(std::string_view text);
  static Hamiltonian load(const std::string& path);

  int n_qubits() const noexcept { return n_qubits_; }
  int n_terms() const noexcept { return static_cast<int>(terms_.size()); }
  const std::vector<HamiltonianTerm>& terms() const noexcept { return terms_; }
  const HamiltonianTerm& term(int i) const { return terms_.at(i); }

  std::string to_text() const;

 private:
  int n_qubits_ = 0;
  std::vector<HamiltonianTerm> terms_;
};

// Closed form for the number of qubit-wise commuting unordered pairs among
// all 4^n Pauli strings on n qubits: (10^n - 4^n) / 2. Throws Overflow for
// n > 19 where 10^n no longer fits in 64 bits.
std::uint64_t count_qwc_edges(int n_qubits);

}  // namespace paulimc
