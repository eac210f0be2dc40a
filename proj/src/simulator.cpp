#include "paulimc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <random>
#include <sstream>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

void check_qubit_count(int n) {
  if (n <= 0) fail(Errc::empty_string, "state needs at least one qubit");
  if (n > StateVector::kMaxQubits) {
    fail(Errc::too_many_qubits,
         std::to_string(n) + " qubits exceeds the dense-state cap of " +
             std::to_string(StateVector::kMaxQubits));
  }
}

// Qubit q occupies bit (n-1-q) of the amplitude index.
std::uint64_t qubit_mask(int q, int n) {
  return 1ull << (n - 1 - q);
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Box-Muller, spelled out so the byte stream consumed per Gaussian pair is
// fixed (library normal_distribution implementations differ).
std::pair<double, double> gaussian_pair(std::mt19937_64& gen) {
  double u1 = uniform01(gen);
  while (u1 == 0.0) u1 = uniform01(gen);
  double u2 = uniform01(gen);
  double radius = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

StateVector StateVector::computational_basis(int n_qubits, std::uint64_t index) {
  check_qubit_count(n_qubits);
  std::uint64_t dim = 1ull << n_qubits;
  if (index >= dim) fail(Errc::index_out_of_range, "basis index out of range");
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_.assign(dim, {0.0, 0.0});
  s.amps_[index] = {1.0, 0.0};
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits,
                                         std::vector<std::complex<double>> amplitudes) {
  check_qubit_count(n_qubits);
  if (amplitudes.size() != (1ull << n_qubits)) {
    fail(Errc::qubit_count_mismatch, "amplitude count is not 2^n");
  }
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > 1e-10) {
    fail(Errc::length_mismatch, "state is not normalized");
  }
  return s;
}

StateVector StateVector::haar_random(int n_qubits, std::uint64_t seed) {
  check_qubit_count(n_qubits);
  std::mt19937_64 gen(seed);
  std::uint64_t dim = 1ull << n_qubits;
  std::vector<std::complex<double>> amps(dim);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    auto [re, im] = gaussian_pair(gen);
    a = {re, im};
    norm_sq += re * re + im * im;
  }
  double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= inv;
  StateVector s;
  s.n_qubits_ = n_qubits;
  s.amps_ = std::move(amps);
  return s;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::apply(const Gate& g) {
  const int n = n_qubits_;
  const std::uint64_t dim = 1ull << n;
  switch (g.kind) {
    case Gate::Kind::h: {
      const std::uint64_t m = qubit_mask(g.q0, n);
      const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & m) continue;
        std::complex<double> lo = amps_[i], hi = amps_[i | m];
        amps_[i] = (lo + hi) * inv_sqrt2;
        amps_[i | m] = (lo - hi) * inv_sqrt2;
      }
      break;
    }
    case Gate::Kind::s: {
      const std::uint64_t m = qubit_mask(g.q0, n);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & m) amps_[i] *= std::complex<double>(0.0, 1.0);
      }
      break;
    }
    case Gate::Kind::cnot: {
      const std::uint64_t mc = qubit_mask(g.q0, n), mt = qubit_mask(g.q1, n);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
      }
      break;
    }
    case Gate::Kind::cz: {
      const std::uint64_t ma = qubit_mask(g.q0, n), mb = qubit_mask(g.q1, n);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
      }
      break;
    }
    case Gate::Kind::swap: {
      const std::uint64_t ma = qubit_mask(g.q0, n), mb = qubit_mask(g.q1, n);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[(i & ~ma) | mb]);
      }
      break;
    }
  }
}

double StateVector::expectation(const PauliString& p) const {
  if (p.n_qubits() != n_qubits_) {
    fail(Errc::qubit_count_mismatch, "Pauli width does not match the state");
  }
  // P = sign * (-i)^y * Z^z X^x. On a basis ket: X^x|i> = |i xor xm>,
  // then Z^z contributes (-1)^(z . (i xor xm)).
  std::uint64_t zm = 0, xm = 0;
  int y = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    if (p.z_bit(q)) zm |= qubit_mask(q, n_qubits_);
    if (p.x_bit(q)) xm |= qubit_mask(q, n_qubits_);
    if (p.z_bit(q) && p.x_bit(q)) ++y;
  }
  static constexpr std::complex<double> kMinusIPow[4] = {
      {1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  const std::complex<double> prefactor =
      kMinusIPow[y % 4] * static_cast<double>(p.sign());
  std::complex<double> acc = 0.0;
  const std::uint64_t dim = 1ull << n_qubits_;
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t j = i ^ xm;
    double z_sign = std::popcount(j & zm) % 2 == 0 ? 1.0 : -1.0;
    acc += std::conj(amps_[j]) * prefactor * z_sign * amps_[i];
  }
  if (std::abs(acc.imag()) > 1e-10) {
    fail(Errc::non_hermitian_product, "expectation came out complex");
  }
  return acc.real();
}

StateVector StateVector::parse(std::istream& in) {
  std::string header;
  int n = 0;
  if (!(in >> header) || header != "qubits" || !(in >> n) || n <= 0) {
    fail(Errc::parse_error, "state file must start with \"qubits <N>\"");
  }
  check_qubit_count(n);
  std::uint64_t dim = 1ull << n;
  std::vector<std::complex<double>> amps;
  amps.reserve(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    double re, im;
    if (!(in >> re >> im)) {
      fail(Errc::parse_error,
           "expected " + std::to_string(dim) + " amplitude lines of \"<re> <im>\"");
    }
    amps.emplace_back(re, im);
  }
  return from_amplitudes(n, std::move(amps));
}

StateVector StateVector::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return parse(in);
}

std::string StateVector::to_text() const {
  std::ostringstream out;
  out.precision(17);
  out << "qubits " << n_qubits_ << "\n";
  for (const auto& a : amps_) out << a.real() << " " << a.imag() << "\n";
  return out.str();
}

StateVector apply_circuit(const StateVector& state, const Circuit& c) {
  if (state.n_qubits() != c.n_qubits) {
    fail(Errc::qubit_count_mismatch, "state and circuit qubit counts differ");
  }
  StateVector out = state;
  for (const Gate& g : c.gates) out.apply(g);
  if (std::abs(out.norm() - 1.0) > 1e-10) {
    fail(Errc::length_mismatch, "circuit application broke normalization");
  }
  return out;
}

OutcomeTable sample_outcomes(const StateVector& state, const Circuit& circuit,
                             const MeasurementMap& map, int shots,
                             std::uint64_t seed) {
  if (shots < 1) fail(Errc::insufficient_shots, "need at least one shot");
  StateVector rotated = apply_circuit(state, circuit);

  const std::uint64_t dim = 1ull << rotated.n_qubits();
  std::vector<double> cumulative(dim);
  double running = 0.0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    running += std::norm(rotated.amplitudes()[i]);
    cumulative[i] = running;
  }
  cumulative.back() = 1.0;  // guard against rounding at the top end

  OutcomeTable table;
  table.shots = shots;
  for (const auto& m : map.members) table.labels.push_back(m.member);
  table.columns.assign(map.members.size(),
                       std::vector<std::int8_t>(static_cast<std::size_t>(shots), 0));

  std::vector<std::uint64_t> bit_masks;
  for (const auto& m : map.members) {
    std::uint64_t mask = 0;
    for (int q : m.bits) mask |= qubit_mask(q, rotated.n_qubits());
    bit_masks.push_back(mask);
  }

  std::mt19937_64 gen(seed);
  for (int shot = 0; shot < shots; ++shot) {
    double u = uniform01(gen);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::uint64_t index =
        static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
    if (index >= dim) index = dim - 1;
    for (std::size_t m = 0; m < map.members.size(); ++m) {
      // A set bit reads -1; the member outcome is the sign times the
      // product over its support.
      int value = std::popcount(index & bit_masks[m]) % 2 == 0 ? 1 : -1;
      table.columns[m][static_cast<std::size_t>(shot)] =
          static_cast<std::int8_t>(map.members[m].sign * value);
    }
  }
  return table;
}

std::string outcomes_to_csv(const OutcomeTable& table) {
  std::ostringstream out;
  for (std::size_t m = 0; m < table.labels.size(); ++m) {
    if (m) out << ",";
    out << table.labels[m];
  }
  out << "\n";
  for (int shot = 0; shot < table.shots; ++shot) {
    for (std::size_t m = 0; m < table.columns.size(); ++m) {
      if (m) out << ",";
      out << static_cast<int>(table.columns[m][static_cast<std::size_t>(shot)]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace paulimc
