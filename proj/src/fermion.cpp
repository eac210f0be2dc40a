#include "paulimc/fermion.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

using Complex = std::complex<double>;

// A complex linear combination of Pauli letter strings (signs folded into
// the coefficients), the working representation while multiplying ladder
// operators out. Keyed by letters, so iteration is lexicographic.
using PauliSum = std::map<std::string, Complex>;

PauliSum multiply_sums(const PauliSum& a, const PauliSum& b) {
  PauliSum out;
  for (const auto& [la, ca] : a) {
    PauliString pa = PauliString::parse(la);
    for (const auto& [lb, cb] : b) {
      PhasedProduct prod = multiply_phased(pa, PauliString::parse(lb));
      static constexpr Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      out[prod.pauli.letters()] += ca * cb * kPhase[prod.phase_exp];
    }
  }
  return out;
}

PauliSum scale(PauliSum sum, Complex factor) {
  for (auto& [letters, coeff] : sum) coeff *= factor;
  return sum;
}

PauliSum add(PauliSum a, const PauliSum& b) {
  for (const auto& [letters, coeff] : b) a[letters] += coeff;
  return a;
}

std::string with_letter(std::string letters, int pos, char letter) {
  letters[static_cast<std::size_t>(pos)] = letter;
  return letters;
}

// Jordan-Wigner ladder operator: (X_p +/- i Y_p)/2 * Z_(p-1)...Z_0,
// with + for the annihilator and - for the creator.
PauliSum jw_ladder(int p, bool dagger, int n) {
  std::string base(static_cast<std::size_t>(n), 'I');
  for (int k = 0; k < p; ++k) base[static_cast<std::size_t>(k)] = 'Z';
  PauliSum out;
  out[with_letter(base, p, 'X')] = {0.5, 0};
  out[with_letter(base, p, 'Y')] = {0, dagger ? -0.5 : 0.5};
  return out;
}

// Parity ladder operator: X_(N-1)...X_(p+1) * (X_p Z_(p-1) +/- i Y_p)/2.
PauliSum parity_ladder(int p, bool dagger, int n) {
  std::string base(static_cast<std::size_t>(n), 'I');
  for (int k = p + 1; k < n; ++k) base[static_cast<std::size_t>(k)] = 'X';
  std::string xz = with_letter(base, p, 'X');
  if (p >= 1) xz = with_letter(xz, p - 1, 'Z');
  PauliSum out;
  out[xz] = {0.5, 0};
  out[with_letter(base, p, 'Y')] = {0, dagger ? -0.5 : 0.5};
  return out;
}

PauliSum ladder(int p, bool dagger, int n, Encoding encoding) {
  return encoding == Encoding::jw ? jw_ladder(p, dagger, n)
                                  : parity_ladder(p, dagger, n);
}

// Expands the full operator of a term as a complex Pauli sum.
PauliSum expand(const FermionicTerm& t, Encoding encoding) {
  const int n = t.n_modes();
  const auto& idx = t.indices();
  switch (t.kind()) {
    case FermionKind::number:
      return scale(multiply_sums(ladder(idx[0], true, n, encoding),
                                 ladder(idx[0], false, n, encoding)),
                   t.coefficient());
    case FermionKind::number_excitation: {
      PauliSum op = multiply_sums(ladder(idx[0], true, n, encoding),
                                  ladder(idx[1], true, n, encoding));
      op = multiply_sums(op, ladder(idx[0], false, n, encoding));
      op = multiply_sums(op, ladder(idx[1], false, n, encoding));
      return scale(op, t.coefficient());
    }
    case FermionKind::double_excitation: {
      PauliSum fwd = multiply_sums(ladder(idx[0], true, n, encoding),
                                   ladder(idx[1], true, n, encoding));
      fwd = multiply_sums(fwd, ladder(idx[2], false, n, encoding));
      fwd = multiply_sums(fwd, ladder(idx[3], false, n, encoding));
      PauliSum rev = multiply_sums(ladder(idx[3], true, n, encoding),
                                   ladder(idx[2], true, n, encoding));
      rev = multiply_sums(rev, ladder(idx[1], false, n, encoding));
      rev = multiply_sums(rev, ladder(idx[0], false, n, encoding));
      PauliSum op = t.symmetric()
                        ? add(std::move(fwd), rev)
                        : add(scale(std::move(fwd), {1, 1}), scale(std::move(rev), {1, -1}));
      return scale(op, t.coefficient());
    }
  }
  fail(Errc::parse_error, "unreachable fermionic kind");
}

EncodedOperator collect(const PauliSum& sum, double scale_hint) {
  // The expansion of a Hermitian operator has real coefficients; dyadic
  // arithmetic makes cancellations exact, the tolerance is just slack for
  // the final rounding.
  const double tiny = 1e-14 * std::max(1.0, std::abs(scale_hint));
  EncodedOperator out;
  for (const auto& [letters, coeff] : sum) {
    if (std::abs(coeff.imag()) > tiny) {
      fail(Errc::non_hermitian_product,
           "encoded coefficient of " + letters + " is not real");
    }
    if (std::abs(coeff.real()) <= tiny) continue;
    PauliString p = PauliString::parse(letters);
    if (p.is_identity()) {
      out.constant_offset += coeff.real();
    } else {
      out.terms.push_back(HamiltonianTerm{coeff.real(), p});
    }
  }
  return out;
}

void check_mode_index(int index, int n_modes) {
  if (index < 0 || index >= n_modes) {
    fail(Errc::index_out_of_range,
         "mode " + std::to_string(index) + " outside 0.." + std::to_string(n_modes - 1));
  }
}

void check_parity_supported(const FermionicTerm& t) {
  const auto& idx = t.indices();
  switch (t.kind()) {
    case FermionKind::number:
      if (idx[0] < 1) {
        fail(Errc::unsupported_index_pattern,
             "parity number term needs p >= 1 for the Z_p Z_(p-1) shape");
      }
      return;
    case FermionKind::number_excitation:
      if (idx[1] < 1) {
        fail(Errc::unsupported_index_pattern,
             "parity number-excitation term needs q >= 1");
      }
      return;
    case FermionKind::double_excitation: {
      int p = idx[0], q = idx[1], r = idx[2], s = idx[3];
      if (!(p - 1 > q && q - 1 > r && r - 1 > s && s >= 1)) {
        fail(Errc::unsupported_index_pattern,
             "parity double excitation needs separated indices: "
             "p-1 > q, q-1 > r, r-1 > s, s >= 1");
      }
      return;
    }
  }
}

}  // namespace

const char* encoding_name(Encoding e) {
  return e == Encoding::jw ? "jw" : "parity";
}

Encoding encoding_from_name(const std::string& name) {
  if (name == "jw") return Encoding::jw;
  if (name == "parity") return Encoding::parity;
  fail(Errc::parse_error, "unknown encoding \"" + name + "\"");
}

FermionicTerm FermionicTerm::number(double coeff, int p, int n_modes) {
  check_mode_index(p, n_modes);
  FermionicTerm t;
  t.kind_ = FermionKind::number;
  t.coefficient_ = coeff;
  t.n_modes_ = n_modes;
  t.idx_ = {p, -1, -1, -1};
  return t;
}

FermionicTerm FermionicTerm::number_excitation(double coeff, int p, int q,
                                               int n_modes) {
  check_mode_index(p, n_modes);
  check_mode_index(q, n_modes);
  if (p < q) std::swap(p, q);  // symmetric under pair exchange, no sign
  if (p == q) {
    fail(Errc::unsupported_index_pattern, "number-excitation indices must differ");
  }
  FermionicTerm t;
  t.kind_ = FermionKind::number_excitation;
  t.coefficient_ = coeff;
  t.n_modes_ = n_modes;
  t.idx_ = {p, q, -1, -1};
  return t;
}

FermionicTerm FermionicTerm::double_excitation(double coeff, int p, int q, int r,
                                               int s, int n_modes, bool symmetric) {
  for (int index : {p, q, r, s}) check_mode_index(index, n_modes);
  // Swapping within the creation pair or within the annihilation pair
  // anticommutes, flipping the overall sign.
  if (p < q) {
    std::swap(p, q);
    coeff = -coeff;
  }
  if (r < s) {
    std::swap(r, s);
    coeff = -coeff;
  }
  if (!(p > q && q > r && r > s)) {
    fail(Errc::unsupported_index_pattern,
         "double excitation indices must reduce to p > q > r > s");
  }
  FermionicTerm t;
  t.kind_ = FermionKind::double_excitation;
  t.coefficient_ = coeff;
  t.n_modes_ = n_modes;
  t.symmetric_ = symmetric;
  t.idx_ = {p, q, r, s};
  return t;
}

EncodedOperator encode_jw(const FermionicTerm& t) {
  return collect(expand(t, Encoding::jw), t.coefficient());
}

EncodedOperator encode_parity(const FermionicTerm& t) {
  check_parity_supported(t);
  return collect(expand(t, Encoding::parity), t.coefficient());
}

EncodedGroup encode_group(const FermionicTerm& t, Encoding encoding) {
  EncodedOperator encoded =
      encoding == Encoding::jw ? encode_jw(t) : encode_parity(t);
  EncodedGroup group;
  group.constant_offset = encoded.constant_offset;
  if (t.kind() == FermionKind::double_excitation) {
    // The two halves of the minimum cover are selected by Y-count parity:
    // two strings whose Y-parities agree differ in an even number of
    // anticommuting slots, so each half is pairwise commuting.
    for (auto& term : encoded.terms) {
      auto& side = term.pauli.y_count() % 2 == 0 ? group.family_even
                                                 : group.family_odd;
      side.push_back(std::move(term));
    }
  } else {
    group.qwc_pool = std::move(encoded.terms);
  }
  return group;
}

StructuralPartition partition_structural(const std::vector<FermionicTerm>& terms,
                                         Encoding encoding) {
  if (terms.empty()) fail(Errc::empty_string, "no fermionic terms");
  int n_modes = terms.front().n_modes();
  for (const auto& t : terms) {
    if (t.n_modes() != n_modes) {
      fail(Errc::length_mismatch, "terms disagree on the mode count");
    }
  }

  std::vector<HamiltonianTerm> assembled;
  std::map<std::string, std::size_t> slot_of;  // letters -> assembled index
  std::vector<std::vector<int>> families;
  double offset = 0.0;

  // Appends a string batch as one new family. Strings already assembled
  // stay in their original family; only their coefficients accumulate.
  auto emit_family = [&](std::vector<HamiltonianTerm>&& batch) {
    std::vector<int> family;
    for (auto& term : batch) {
      auto [it, inserted] = slot_of.emplace(term.pauli.letters(), assembled.size());
      if (inserted) {
        family.push_back(static_cast<int>(assembled.size()));
        assembled.push_back(std::move(term));
      } else {
        assembled[it->second].coefficient += term.coefficient;
      }
    }
    if (!family.empty()) families.push_back(std::move(family));
  };

  // Pool family: all all-I/Z strings from number / number-excitation
  // terms, mutually qubit-wise commuting by construction.
  std::vector<HamiltonianTerm> pool;
  std::vector<EncodedGroup> excitation_groups;
  for (const auto& t : terms) {
    EncodedGroup group = encode_group(t, encoding);
    offset += group.constant_offset;
    for (auto& term : group.qwc_pool) pool.push_back(std::move(term));
    if (!group.family_even.empty() || !group.family_odd.empty()) {
      excitation_groups.push_back(std::move(group));
    }
  }
  emit_family(std::move(pool));
  for (auto& group : excitation_groups) {
    emit_family(std::move(group.family_even));
    emit_family(std::move(group.family_odd));
  }

  if (assembled.empty()) {
    fail(Errc::empty_string, "fermionic operator reduced to a constant");
  }
  Hamiltonian h(n_modes, assembled);
  PartitionSet p;
  p.mode = Mode::gc;
  p.n_terms = h.n_terms();
  p.families = std::move(families);
  return StructuralPartition{std::move(h), std::move(p), offset};
}

std::vector<FermionicTerm> parse_fermion_file(std::istream& in) {
  std::vector<FermionicTerm> terms;
  int n_modes = -1;
  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    fail(Errc::parse_error, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "modes") {
      if (n_modes != -1) bad("duplicate modes header");
      if (!(ls >> n_modes) || n_modes <= 0) bad("modes header needs a positive count");
      continue;
    }
    if (n_modes == -1) bad("term before the modes header");
    double coeff;
    if (!(ls >> coeff)) bad("expected a coefficient after " + keyword);
    auto read_index = [&]() {
      int v;
      if (!(ls >> v)) bad("missing mode index");
      return v;
    };
    try {
      if (keyword == "N") {
        int p = read_index();
        terms.push_back(FermionicTerm::number(coeff, p, n_modes));
      } else if (keyword == "NE") {
        int p = read_index(), q = read_index();
        terms.push_back(FermionicTerm::number_excitation(coeff, p, q, n_modes));
      } else if (keyword == "DE" || keyword == "DEA") {
        int p = read_index(), q = read_index(), r = read_index(), s = read_index();
        terms.push_back(FermionicTerm::double_excitation(coeff, p, q, r, s, n_modes,
                                                         keyword == "DE"));
      } else {
        bad("unknown term keyword \"" + keyword + "\"");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse_error) throw;  // already carries the line
      // Keep the original error class, add the line for context.
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    std::string trailing;
    if (ls >> trailing) bad("unexpected trailing \"" + trailing + "\"");
  }
  if (n_modes == -1) fail(Errc::parse_error, "missing modes header");
  if (terms.empty()) fail(Errc::parse_error, "no fermionic terms in input");
  return terms;
}

std::vector<FermionicTerm> load_fermion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return parse_fermion_file(in);
}

}  // namespace paulimc
