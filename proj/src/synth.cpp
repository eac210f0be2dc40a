#include "paulimc/synth.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

// Symplectic 2N-bit vector of a Pauli (Z words then X words).
std::vector<std::uint64_t> symplectic(const PauliString& p) {
  std::vector<std::uint64_t> v = p.z_words();
  v.insert(v.end(), p.x_words().begin(), p.x_words().end());
  return v;
}

bool is_zero(const std::vector<std::uint64_t>& v) {
  for (std::uint64_t w : v) {
    if (w) return false;
  }
  return true;
}

// GF(2) solver: rows are the basis vectors; tracks which combination of
// basis rows reduces a target to zero.
class Gf2Span {
 public:
  // Returns true and records the row if it was independent.
  bool add(const std::vector<std::uint64_t>& vec) {
    std::vector<std::uint64_t> v = vec;
    std::uint64_t combo = 0;
    reduce(v, combo);
    if (is_zero(v)) return false;
    rows_.push_back(std::move(v));
    combos_.push_back(combo | (1ull << (rows_.size() - 1)));
    return true;
  }

  // Expresses target over the added rows; each set bit i of the result
  // means "row i participates". Fails if the target is outside the span.
  std::uint64_t solve(const std::vector<std::uint64_t>& target) const {
    std::vector<std::uint64_t> v = target;
    std::uint64_t combo = 0;
    reduce(v, combo);
    if (!is_zero(v)) {
      fail(Errc::rank_deficiency, "vector outside the basis span");
    }
    return combo;
  }

 private:
  void reduce(std::vector<std::uint64_t>& v, std::uint64_t& combo) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t lead = 0;
      while (lead < rows_[r].size() && rows_[r][lead] == 0) ++lead;
      std::uint64_t low = rows_[r][lead] & ~(rows_[r][lead] - 1);
      if (v[lead] & low) {
        for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= rows_[r][w];
        combo ^= combos_[r];
      }
    }
  }

  // rows_ are kept mutually reduced enough for leader uniqueness: each new
  // row is fully reduced against the existing ones before insertion, and
  // existing rows never contain a later row's leader because that leader
  // was absent from the space they were reduced in. A single forward pass
  // is therefore a complete reduction.
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::uint64_t> combos_;
};

bool pairwise_qwc(const std::vector<PauliString>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      if (!commutes_qwc(columns[i], columns[j])) return false;
    }
  }
  return true;
}

// Column rank of the X-block.
int x_rank(const StabilizerTableau& t) {
  Gf2Span span;
  int rank = 0;
  for (int j = 0; j < t.n_columns(); ++j) {
    if (span.add(t.column(j).x_words())) ++rank;
  }
  return rank;
}

void push_snapshot(std::vector<TableauSnapshot>* trace, const StabilizerTableau& t) {
  if (trace) trace->push_back(t.snapshot());
}

void emit(Circuit& circuit, StabilizerTableau& t, const Gate& g) {
  circuit.gates.push_back(g);
  t.apply(g);
}

}  // namespace

BasisExtraction extract_basis(const std::vector<PauliString>& family) {
  if (family.empty()) fail(Errc::empty_string, "empty family");
  const int n = family.front().n_qubits();
  for (const auto& p : family) {
    if (p.n_qubits() != n) fail(Errc::length_mismatch, "family widths differ");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!commutes_gc(family[i], family[j])) {
        fail(Errc::not_commuting,
             family[i].letters() + " and " + family[j].letters());
      }
    }
  }

  // Scan order: fewest Y letters first. The basis is what the circuit has
  // to diagonalize, so prefer the cheapest representatives.
  std::vector<int> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return family[static_cast<std::size_t>(a)].y_count() <
           family[static_cast<std::size_t>(b)].y_count();
  });

  Gf2Span probe;
  std::vector<int> chosen;
  for (int idx : order) {
    const PauliString& p = family[static_cast<std::size_t>(idx)];
    if (p.is_identity()) continue;
    if (probe.add(symplectic(p))) chosen.push_back(idx);
  }
  if (chosen.empty()) {
    fail(Errc::empty_string, "family contains only identity strings");
  }
  std::sort(chosen.begin(), chosen.end());

  // Rebuild the span in final basis order so solve() bits line up.
  if (chosen.size() > 64) {
    fail(Errc::too_large, "basis larger than 64 columns");
  }
  Gf2Span span;
  std::vector<PauliString> columns;
  for (int idx : chosen) {
    PauliString col = family[static_cast<std::size_t>(idx)].with_sign(1);
    span.add(symplectic(col));
    columns.push_back(std::move(col));
  }

  BasisExtraction out{StabilizerTableau::from_columns(columns), chosen, {}};
  for (const auto& member : family) {
    std::uint64_t combo = span.solve(symplectic(member));
    Decomposition d;
    PauliString product = PauliString::identity(n);
    for (std::size_t b = 0; b < chosen.size(); ++b) {
      if (combo & (1ull << b)) {
        d.basis_indices.push_back(static_cast<int>(b));
        product = multiply(product, columns[b]);
      }
    }
    if (!product.same_letters(member)) {
      fail(Errc::rank_deficiency, "decomposition does not reproduce " + member.letters());
    }
    d.sign = product.sign() * member.sign();
    out.decompositions.push_back(std::move(d));
  }
  return out;
}

SynthesisResult synthesize(const StabilizerTableau& tableau,
                           std::vector<TableauSnapshot>* trace) {
  const int n = tableau.n_qubits();
  const int k = tableau.n_columns();
  StabilizerTableau t = tableau;
  Circuit circuit;
  circuit.n_qubits = n;

  if (pairwise_qwc(t.columns())) {
    // Qubit-wise families need only local basis rotations: each qubit
    // carries at most one distinct non-identity letter across all columns.
    push_snapshot(trace, t);
    SynthesisResult result;
    std::set<int> support;
    for (int q = 0; q < n; ++q) {
      char seen = 'I';
      for (int j = 0; j < k; ++j) {
        char letter = t.column(j).letter(q);
        if (letter != 'I') {
          seen = letter;
          support.insert(q);
        }
      }
      if (seen == 'Y') emit(circuit, t, Gate::s(q));
      if (seen == 'Y' || seen == 'X') emit(circuit, t, Gate::h(q));
    }
    push_snapshot(trace, t);
    circuit.measured_qubits.assign(support.begin(), support.end());
    result.circuit = std::move(circuit);
    result.final_tableau = std::move(t);
    result.pivot_qubits.assign(support.begin(), support.end());
    result.rotation_only = true;
    return result;
  }

  push_snapshot(trace, t);

  // Step 1: raise the X-block to full column rank with H gates. Such a
  // qubit set always exists for an independent commuting tableau; the
  // lowest single qubit that makes progress is taken each round.
  while (x_rank(t) < k) {
    int before = x_rank(t);
    bool progressed = false;
    for (int q = 0; q < n && !progressed; ++q) {
      StabilizerTableau probe = t;
      probe.apply(Gate::h(q));
      if (x_rank(probe) > before) {
        emit(circuit, t, Gate::h(q));
        progressed = true;
      }
    }
    if (!progressed) {
      fail(Errc::rank_deficiency, "no single H raises the X-block rank");
    }
  }
  push_snapshot(trace, t);

  // Step 2: Gaussian-eliminate the X-block to the k x k identity. Column
  // j picks the lowest pivot row >= j, clears every other set row with
  // CNOTs from the pivot, then SWAPs the pivot into row j.
  for (int j = 0; j < k; ++j) {
    int pivot = -1;
    for (int row = j; row < n && pivot < 0; ++row) {
      if (t.column(j).x_bit(row)) pivot = row;
    }
    if (pivot < 0) {
      fail(Errc::rank_deficiency, "X-block lost rank during elimination");
    }
    for (int row = 0; row < n; ++row) {
      if (row != pivot && t.column(j).x_bit(row)) {
        emit(circuit, t, Gate::cnot(pivot, row));
        push_snapshot(trace, t);
      }
    }
    if (pivot != j) {
      emit(circuit, t, Gate::swap(j, pivot));
      push_snapshot(trace, t);
    }
  }

  // Step 3: clear the Z-block. S kills diagonal entries; CZ kills the
  // symmetric off-diagonal pairs and the rows below the pivot block.
  for (int j = 0; j < k; ++j) {
    if (t.column(j).z_bit(j)) emit(circuit, t, Gate::s(j));
  }
  for (int j = 0; j < k; ++j) {
    for (int row = j + 1; row < n; ++row) {
      if (t.column(j).z_bit(row)) emit(circuit, t, Gate::cz(j, row));
    }
  }
  push_snapshot(trace, t);

  // Step 4: H on the pivot qubits turns the X-identity into single-Z
  // columns, the computational-basis form.
  for (int j = 0; j < k; ++j) emit(circuit, t, Gate::h(j));
  push_snapshot(trace, t);

  for (int j = 0; j < k; ++j) {
    const PauliString& col = t.column(j);
    bool ok = col.is_diagonal() && col.weight() == 1 && col.z_bit(j);
    if (!ok) {
      fail(Errc::rank_deficiency,
           "column " + std::to_string(j) + " did not reach single-Z form");
    }
  }

  SynthesisResult result;
  circuit.measured_qubits.resize(static_cast<std::size_t>(k));
  std::iota(circuit.measured_qubits.begin(), circuit.measured_qubits.end(), 0);
  result.pivot_qubits = circuit.measured_qubits;
  result.circuit = std::move(circuit);
  result.final_tableau = std::move(t);
  result.rotation_only = false;
  return result;
}

MeasurementMap build_measurement_map(const std::vector<PauliString>& family,
                                     const BasisExtraction& basis,
                                     const SynthesisResult& synth) {
  const Circuit& circuit = synth.circuit;
  MeasurementMap map;
  map.n_qubits = circuit.n_qubits;
  map.measured_qubits = circuit.measured_qubits;

  // Image of each basis member under the circuit, replayed gate by gate
  // (not read from the tableau: this is the independent route).
  struct Image {
    int sign;
    std::vector<int> zs;
  };
  std::vector<Image> images;
  for (int idx : basis.basis_member_indices) {
    PauliString image =
        conjugate_through(family[static_cast<std::size_t>(idx)].with_sign(1), circuit);
    if (!image.is_diagonal()) {
      fail(Errc::not_diagonalized,
           family[static_cast<std::size_t>(idx)].letters() + " maps to " +
               image.letters());
    }
    if (!synth.rotation_only && image.weight() != 1) {
      fail(Errc::not_diagonalized,
           "basis image " + image.letters() + " is not a single Z");
    }
    Image img{image.sign(), {}};
    for (int q = 0; q < image.n_qubits(); ++q) {
      if (image.z_bit(q)) img.zs.push_back(q);
    }
    images.push_back(std::move(img));
  }

  for (std::size_t m = 0; m < family.size(); ++m) {
    const Decomposition& d = basis.decompositions[m];
    MemberReadout r;
    r.member = family[m].letters();
    r.basis_indices = d.basis_indices;
    r.sign = d.sign;
    std::set<int> bits;
    for (int b : d.basis_indices) {
      r.sign *= images[static_cast<std::size_t>(b)].sign;
      for (int q : images[static_cast<std::size_t>(b)].zs) {
        // Shared qubits read twice contribute (+/-1)^2 and drop out.
        if (!bits.insert(q).second) bits.erase(q);
      }
    }
    r.bits.assign(bits.begin(), bits.end());

    // The composed readout must agree with conjugating the member itself.
    PauliString direct = conjugate_through(family[m].with_sign(1), circuit);
    if (!direct.is_diagonal()) {
      fail(Errc::not_diagonalized, r.member + " maps to " + direct.letters());
    }
    std::vector<int> direct_bits;
    for (int q = 0; q < direct.n_qubits(); ++q) {
      if (direct.z_bit(q)) direct_bits.push_back(q);
    }
    if (direct.sign() * family[m].sign() != r.sign || direct_bits != r.bits) {
      fail(Errc::not_diagonalized,
           "composed readout of " + r.member + " disagrees with direct conjugation");
    }
    map.members.push_back(std::move(r));
  }
  return map;
}

std::pair<Circuit, MeasurementMap> elide_swaps(const Circuit& circuit,
                                               const MeasurementMap& map) {
  std::vector<int> wire(static_cast<std::size_t>(circuit.n_qubits));
  std::iota(wire.begin(), wire.end(), 0);

  Circuit out;
  out.n_qubits = circuit.n_qubits;
  for (const Gate& g : circuit.gates) {
    if (g.kind == Gate::Kind::swap) {
      std::swap(wire[static_cast<std::size_t>(g.q0)],
                wire[static_cast<std::size_t>(g.q1)]);
      continue;
    }
    Gate relabeled = g;
    relabeled.q0 = wire[static_cast<std::size_t>(g.q0)];
    if (g.q1 >= 0) relabeled.q1 = wire[static_cast<std::size_t>(g.q1)];
    out.gates.push_back(relabeled);
  }
  auto relabel_bits = [&wire](const std::vector<int>& bits) {
    std::vector<int> mapped;
    mapped.reserve(bits.size());
    for (int q : bits) mapped.push_back(wire[static_cast<std::size_t>(q)]);
    std::sort(mapped.begin(), mapped.end());
    return mapped;
  };
  out.measured_qubits = relabel_bits(circuit.measured_qubits);

  MeasurementMap mapped = map;
  mapped.measured_qubits = out.measured_qubits;
  for (auto& member : mapped.members) member.bits = relabel_bits(member.bits);
  return {std::move(out), std::move(mapped)};
}

std::string map_to_json(const MeasurementMap& map) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["n_qubits"] = map.n_qubits;
  j["measured_qubits"] = map.measured_qubits;
  j["members"] = nlohmann::json::array();
  for (const auto& m : map.members) {
    j["members"].push_back({{"member", m.member}, {"sign", m.sign}, {"bits", m.bits}});
  }
  return j.dump(2) + "\n";
}

MeasurementMap map_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("measurement map: ") + e.what());
  }
  try {
    MeasurementMap map;
    map.n_qubits = j.at("n_qubits").get<int>();
    map.measured_qubits = j.at("measured_qubits").get<std::vector<int>>();
    for (const auto& m : j.at("members")) {
      MemberReadout r;
      r.member = m.at("member").get<std::string>();
      r.sign = m.at("sign").get<int>();
      r.bits = m.at("bits").get<std::vector<int>>();
      if (r.sign != 1 && r.sign != -1) {
        fail(Errc::parse_error, "member sign must be +1 or -1");
      }
      map.members.push_back(std::move(r));
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("measurement map: ") + e.what());
  }
}

MeasurementMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return map_from_json(buffer.str());
}

}  // namespace paulimc
