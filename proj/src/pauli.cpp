#include "paulimc/pauli.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

std::atomic<std::uint64_t> g_predicate_calls{0};

std::size_t word_count(int n_qubits) {
  return static_cast<std::size_t>((n_qubits + 63) / 64);
}

int popcount_and(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    total += std::popcount(a[w] & b[w]);
  }
  return total;
}

}  // namespace

std::uint64_t predicate_call_count() noexcept { return g_predicate_calls.load(); }
void reset_predicate_call_count() noexcept { g_predicate_calls.store(0); }

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits <= 0) fail(Errc::empty_string, "Pauli string needs at least one qubit");
  PauliString p;
  p.n_qubits_ = n_qubits;
  p.z_.assign(word_count(n_qubits), 0);
  p.x_.assign(word_count(n_qubits), 0);
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) fail(Errc::empty_string, "empty Pauli string");
  PauliString p = identity(static_cast<int>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      fail(Errc::invalid_character,
           std::string("'") + c + "' at position " + std::to_string(i) +
               " in \"" + std::string(text) + "\"");
    }
    p.set_letter(static_cast<int>(i), c);
  }
  return p;
}

PauliString PauliString::from_bits(int n_qubits, std::vector<std::uint64_t> z,
                                   std::vector<std::uint64_t> x, int sign) {
  PauliString p = identity(n_qubits);
  if (z.size() != p.z_.size() || x.size() != p.x_.size()) {
    fail(Errc::length_mismatch, "word count does not match qubit count");
  }
  if (n_qubits % 64 != 0) {
    std::uint64_t excess = ~0ull << (n_qubits % 64);
    if ((z.back() & excess) || (x.back() & excess)) {
      fail(Errc::index_out_of_range, "bits set beyond the qubit count");
    }
  }
  if (sign != 1 && sign != -1) fail(Errc::invalid_character, "sign must be +1 or -1");
  p.z_ = std::move(z);
  p.x_ = std::move(x);
  p.sign_ = sign;
  return p;
}

PauliString PauliString::with_sign(int sign) const {
  if (sign != 1 && sign != -1) fail(Errc::invalid_character, "sign must be +1 or -1");
  PauliString p = *this;
  p.sign_ = sign;
  return p;
}

bool PauliString::z_bit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) fail(Errc::index_out_of_range, "qubit index");
  return (z_[qubit / 64] >> (qubit % 64)) & 1u;
}

bool PauliString::x_bit(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) fail(Errc::index_out_of_range, "qubit index");
  return (x_[qubit / 64] >> (qubit % 64)) & 1u;
}

void PauliString::set_letter(int qubit, char letter) {
  if (qubit < 0 || qubit >= n_qubits_) fail(Errc::index_out_of_range, "qubit index");
  std::uint64_t mask = 1ull << (qubit % 64);
  std::uint64_t z = 0, x = 0;
  switch (letter) {
    case 'I': break;
    case 'Z': z = 1; break;
    case 'X': x = 1; break;
    case 'Y': z = 1; x = 1; break;
    default: fail(Errc::invalid_character, std::string("'") + letter + "'");
  }
  z_[qubit / 64] = (z_[qubit / 64] & ~mask) | (z ? mask : 0);
  x_[qubit / 64] = (x_[qubit / 64] & ~mask) | (x ? mask : 0);
}

char PauliString::letter(int qubit) const {
  bool z = z_bit(qubit), x = x_bit(qubit);
  if (z && x) return 'Y';
  if (z) return 'Z';
  if (x) return 'X';
  return 'I';
}

std::string PauliString::letters() const {
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) s[static_cast<std::size_t>(q)] = letter(q);
  return s;
}

std::string PauliString::signed_str() const {
  return (sign_ < 0 ? "-" : "+") + letters();
}

bool PauliString::is_identity() const noexcept {
  for (std::size_t w = 0; w < z_.size(); ++w) {
    if (z_[w] | x_[w]) return false;
  }
  return true;
}

bool PauliString::is_diagonal() const noexcept {
  for (std::uint64_t w : x_) {
    if (w) return false;
  }
  return true;
}

int PauliString::weight() const noexcept {
  int total = 0;
  for (std::size_t w = 0; w < z_.size(); ++w) {
    total += std::popcount(z_[w] | x_[w]);
  }
  return total;
}

int PauliString::y_count() const noexcept {
  return popcount_and(z_, x_);
}

bool PauliString::same_letters(const PauliString& other) const {
  return n_qubits_ == other.n_qubits_ && z_ == other.z_ && x_ == other.x_;
}

bool commutes_qwc(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) fail(Errc::length_mismatch, "qubit counts differ");
  g_predicate_calls.fetch_add(1, std::memory_order_relaxed);
  const auto &az = a.z_words(), &ax = a.x_words();
  const auto &bz = b.z_words(), &bx = b.x_words();
  for (std::size_t w = 0; w < az.size(); ++w) {
    // Conflict on a qubit: both letters non-identity and not equal.
    std::uint64_t both = (az[w] | ax[w]) & (bz[w] | bx[w]);
    std::uint64_t differ = (az[w] ^ bz[w]) | (ax[w] ^ bx[w]);
    if (both & differ) return false;
  }
  return true;
}

bool commutes_gc(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) fail(Errc::length_mismatch, "qubit counts differ");
  g_predicate_calls.fetch_add(1, std::memory_order_relaxed);
  // Symplectic form: the strings commute iff <a.x, b.z> + <a.z, b.x> is even.
  int acc = popcount_and(a.x_words(), b.z_words()) +
            popcount_and(a.z_words(), b.x_words());
  return (acc & 1) == 0;
}

PhasedProduct multiply_phased(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) fail(Errc::length_mismatch, "qubit counts differ");
  const auto &az = a.z_words(), &ax = a.x_words();
  const auto &bz = b.z_words(), &bx = b.x_words();
  std::vector<std::uint64_t> cz(az.size()), cx(ax.size());
  // With the letter convention P(z,x) = (-i)^(z.x) Z^z X^x, the product is
  // a*b = i^t * c where c = a xor b and
  //   t = |cz&cx| - |az&ax| - |bz&bx| + 2*|ax&bz|  (mod 4).
  int t = 0;
  for (std::size_t w = 0; w < az.size(); ++w) {
    cz[w] = az[w] ^ bz[w];
    cx[w] = ax[w] ^ bx[w];
    t += std::popcount(cz[w] & cx[w]);
    t -= std::popcount(az[w] & ax[w]);
    t -= std::popcount(bz[w] & bx[w]);
    t += 2 * std::popcount(ax[w] & bz[w]);
  }
  if (a.sign() < 0) t += 2;
  if (b.sign() < 0) t += 2;
  t = ((t % 4) + 4) % 4;
  return PhasedProduct{PauliString::from_bits(a.n_qubits(), std::move(cz),
                                              std::move(cx)),
                       t};
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PhasedProduct p = multiply_phased(a, b);
  if (p.phase_exp % 2 != 0) {
    fail(Errc::non_hermitian_product,
         a.signed_str() + " * " + b.signed_str() + " has phase i^" +
             std::to_string(p.phase_exp));
  }
  return p.phase_exp == 2 ? p.pauli.negated() : p.pauli;
}

Hamiltonian::Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits <= 0) fail(Errc::empty_string, "Hamiltonian needs at least one qubit");
  std::map<std::string, std::size_t> seen;
  for (auto& t : terms) {
    if (t.pauli.n_qubits() != n_qubits) {
      fail(Errc::length_mismatch,
           "term " + t.pauli.letters() + " has " +
               std::to_string(t.pauli.n_qubits()) + " qubits, expected " +
               std::to_string(n_qubits));
    }
    double coeff = t.coefficient * t.pauli.sign();
    PauliString letters = t.pauli.with_sign(1);
    auto [it, inserted] = seen.emplace(letters.letters(), terms_.size());
    if (inserted) {
      terms_.push_back(HamiltonianTerm{coeff, letters});
    } else {
      terms_[it->second].coefficient += coeff;
    }
  }
  if (terms_.empty()) fail(Errc::empty_string, "Hamiltonian has no terms");
}

Hamiltonian Hamiltonian::parse(std::istream& in) {
  std::vector<HamiltonianTerm> terms;
  int n_qubits = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    double coeff;
    std::string word;
    if (!(ls >> coeff)) {
      std::istringstream probe(line);
      std::string leftover;
      if (probe >> leftover) {
        fail(Errc::parse_error,
             "line " + std::to_string(line_no) + ": expected a coefficient, got \"" +
                 leftover + "\"");
      }
      continue;  // blank or comment-only line
    }
    if (!(ls >> word)) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": coefficient without a Pauli string");
    }
    std::string trailing;
    if (ls >> trailing) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": unexpected trailing \"" + trailing + "\"");
    }
    PauliString p;
    try {
      p = PauliString::parse(word);
    } catch (const Error& e) {
      fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (n_qubits == 0) {
      n_qubits = p.n_qubits();
    } else if (p.n_qubits() != n_qubits) {
      fail(Errc::parse_error,
           "line " + std::to_string(line_no) + ": string width " +
               std::to_string(p.n_qubits()) + " differs from earlier width " +
               std::to_string(n_qubits));
    }
    terms.push_back(HamiltonianTerm{coeff, p});
  }
  if (terms.empty()) fail(Errc::parse_error, "no Hamiltonian terms in input");
  return Hamiltonian(n_qubits, std::move(terms));
}

Hamiltonian Hamiltonian::parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse(in);
}

Hamiltonian Hamiltonian::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return parse(in);
}

std::string Hamiltonian::to_text() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& t : terms_) {
    out << t.coefficient << " " << t.pauli.letters() << "\n";
  }
  return out.str();
}

std::uint64_t count_qwc_edges(int n_qubits) {
  if (n_qubits < 1) fail(Errc::index_out_of_range, "need at least one qubit");
  // (10^n - 4^n) / 2; 10^20 overflows unsigned 64-bit.
  if (n_qubits > 19) {
    fail(Errc::overflow, "10^" + std::to_string(n_qubits) + " exceeds 64 bits");
  }
  std::uint64_t p10 = 1, p4 = 1;
  for (int i = 0; i < n_qubits; ++i) {
    p10 *= 10;
    p4 *= 4;
  }
  return (p10 - p4) / 2;
}

}  // namespace paulimc
