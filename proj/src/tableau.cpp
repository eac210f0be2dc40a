#include "paulimc/tableau.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    fail(Errc::index_out_of_range,
         "qubit " + std::to_string(q) + " outside 0.." + std::to_string(n - 1));
  }
}

void check_gate(const Gate& g, int n) {
  check_qubit(g.q0, n);
  if (g.kind == Gate::Kind::h || g.kind == Gate::Kind::s) return;
  check_qubit(g.q1, n);
  if (g.q0 == g.q1) {
    fail(Errc::index_out_of_range, "two-qubit gate with equal operands");
  }
}

}  // namespace

std::string gate_to_text(const Gate& g) {
  switch (g.kind) {
    case Gate::Kind::h: return "H " + std::to_string(g.q0);
    case Gate::Kind::s: return "S " + std::to_string(g.q0);
    case Gate::Kind::cnot:
      return "CNOT " + std::to_string(g.q0) + " " + std::to_string(g.q1);
    case Gate::Kind::cz:
      return "CZ " + std::to_string(g.q0) + " " + std::to_string(g.q1);
    case Gate::Kind::swap:
      return "SWAP " + std::to_string(g.q0) + " " + std::to_string(g.q1);
  }
  return "?";
}

int Circuit::entangling_gate_count() const {
  int count = 0;
  for (const Gate& g : gates) {
    if (g.kind != Gate::Kind::h && g.kind != Gate::Kind::s) ++count;
  }
  return count;
}

std::string Circuit::to_text() const {
  std::ostringstream out;
  out << "qubits " << n_qubits << "\n";
  for (const Gate& g : gates) out << gate_to_text(g) << "\n";
  for (int q : measured_qubits) out << "MEASURE " << q << "\n";
  return out.str();
}

Circuit Circuit::parse(std::istream& in) {
  Circuit c;
  bool have_header = false;
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
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "qubits") {
      if (have_header) bad("duplicate qubits header");
      if (!(ls >> c.n_qubits) || c.n_qubits <= 0) bad("qubits header needs a positive count");
      have_header = true;
      continue;
    }
    if (!have_header) bad("gate before the qubits header");
    auto read_q = [&]() {
      int q;
      if (!(ls >> q)) bad("missing qubit operand");
      return q;
    };
    Gate g{Gate::Kind::h, -1, -1};
    if (word == "H") {
      g = Gate::h(read_q());
    } else if (word == "S") {
      g = Gate::s(read_q());
    } else if (word == "CNOT") {
      int a = read_q(), b = read_q();
      g = Gate::cnot(a, b);
    } else if (word == "CZ") {
      int a = read_q(), b = read_q();
      g = Gate::cz(a, b);
    } else if (word == "SWAP") {
      int a = read_q(), b = read_q();
      g = Gate::swap(a, b);
    } else if (word == "MEASURE") {
      int q = read_q();
      check_qubit(q, c.n_qubits);
      c.measured_qubits.push_back(q);
      continue;
    } else {
      bad("unknown gate \"" + word + "\"");
    }
    std::string trailing;
    if (ls >> trailing) bad("unexpected trailing \"" + trailing + "\"");
    try {
      check_gate(g, c.n_qubits);
    } catch (const Error& e) {
      bad(e.what());
    }
    c.gates.push_back(g);
  }
  if (!have_header) fail(Errc::parse_error, "missing qubits header");
  return c;
}

Circuit Circuit::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

Circuit Circuit::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  return parse(in);
}

PauliString conjugate(const PauliString& p, const Gate& g) {
  check_gate(g, p.n_qubits());
  PauliString r = p;
  auto z = [&r](int q) { return r.z_bit(q); };
  auto x = [&r](int q) { return r.x_bit(q); };
  auto set = [&r](int q, bool zb, bool xb) {
    r.set_letter(q, zb ? (xb ? 'Y' : 'Z') : (xb ? 'X' : 'I'));
  };
  switch (g.kind) {
    case Gate::Kind::h: {
      // X <-> Z, Y -> -Y.
      int q = g.q0;
      bool zb = z(q), xb = x(q);
      if (zb && xb) r.flip_sign();
      set(q, xb, zb);
      break;
    }
    case Gate::Kind::s: {
      // X -> Y, Y -> -X, Z fixed.
      int q = g.q0;
      if (x(q)) {
        if (z(q)) r.flip_sign();
        set(q, !z(q), true);
      }
      break;
    }
    case Gate::Kind::cnot: {
      // X_c -> X_c X_t, Z_t -> Z_c Z_t; the sign flips on the Y-producing
      // combinations, condition x_c z_t (x_t xor z_c xor 1).
      int c = g.q0, t = g.q1;
      bool zc = z(c), xc = x(c), zt = z(t), xt = x(t);
      if (xc && zt && (xt == zc)) r.flip_sign();
      set(c, zc ^ zt, xc);
      set(t, zt, xt ^ xc);
      break;
    }
    case Gate::Kind::cz: {
      // X_a -> X_a Z_b, X_b -> Z_a X_b; sign flips when both X parts are
      // present and exactly one Z is. Old values feed the whole update.
      int a = g.q0, b = g.q1;
      bool za = z(a), xa = x(a), zb = z(b), xb = x(b);
      if (xa && xb && (za != zb)) r.flip_sign();
      set(a, za ^ xb, xa);
      set(b, zb ^ xa, xb);
      break;
    }
    case Gate::Kind::swap: {
      int a = g.q0, b = g.q1;
      bool za = z(a), xa = x(a), zb = z(b), xb = x(b);
      set(a, zb, xb);
      set(b, za, xa);
      break;
    }
  }
  return r;
}

PauliString conjugate_through(PauliString p, const Circuit& c) {
  if (p.n_qubits() != c.n_qubits) {
    fail(Errc::qubit_count_mismatch, "Pauli width does not match the circuit");
  }
  for (const Gate& g : c.gates) p = conjugate(p, g);
  return p;
}

StabilizerTableau StabilizerTableau::from_columns(std::vector<PauliString> columns) {
  if (columns.empty()) fail(Errc::empty_string, "tableau needs at least one column");
  int n = columns.front().n_qubits();
  for (const auto& c : columns) {
    if (c.n_qubits() != n) fail(Errc::length_mismatch, "column widths differ");
  }
  if (static_cast<int>(columns.size()) > n) {
    fail(Errc::rank_deficiency,
         "more columns than qubits cannot be independent");
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      if (!commutes_gc(columns[i], columns[j])) {
        fail(Errc::not_commuting,
             columns[i].letters() + " and " + columns[j].letters());
      }
    }
  }
  // Independence over GF(2): eliminate the 2N-bit symplectic vectors.
  std::vector<std::vector<std::uint64_t>> reduced;
  for (const auto& col : columns) {
    std::vector<std::uint64_t> vec = col.z_words();
    vec.insert(vec.end(), col.x_words().begin(), col.x_words().end());
    for (const auto& row : reduced) {
      // Align on the row's leading bit.
      std::size_t lead = 0;
      while (lead < row.size() && row[lead] == 0) ++lead;
      std::uint64_t low = row[lead] & ~(row[lead] - 1);
      if (vec[lead] & low) {
        for (std::size_t w = 0; w < vec.size(); ++w) vec[w] ^= row[w];
      }
    }
    bool zero = true;
    for (std::uint64_t w : vec) zero = zero && w == 0;
    if (zero) {
      fail(Errc::rank_deficiency, col.letters() + " is dependent on earlier columns");
    }
    reduced.push_back(std::move(vec));
    // Keep rows in echelon form: re-eliminate earlier rows is unnecessary
    // for a pure rank check as long as each stored row keeps a distinct
    // leading bit; enforce by back-substituting the new row.
    for (std::size_t r = 0; r + 1 < reduced.size(); ++r) {
      auto& back = reduced.back();
      std::size_t lead = 0;
      while (lead < back.size() && back[lead] == 0) ++lead;
      std::uint64_t low = back[lead] & ~(back[lead] - 1);
      if (reduced[r][lead] & low) {
        for (std::size_t w = 0; w < back.size(); ++w) reduced[r][w] ^= back[w];
      }
    }
  }
  StabilizerTableau t;
  t.n_qubits_ = n;
  t.cols_ = std::move(columns);
  return t;
}

void StabilizerTableau::apply(const Gate& g) {
  for (auto& col : cols_) col = conjugate(col, g);
}

std::vector<std::vector<std::uint8_t>> StabilizerTableau::snapshot() const {
  const int k = n_columns();
  std::vector<std::vector<std::uint8_t>> m(
      static_cast<std::size_t>(2 * n_qubits_),
      std::vector<std::uint8_t>(static_cast<std::size_t>(k), 0));
  for (int j = 0; j < k; ++j) {
    for (int q = 0; q < n_qubits_; ++q) {
      m[static_cast<std::size_t>(q)][static_cast<std::size_t>(j)] =
          cols_[static_cast<std::size_t>(j)].z_bit(q) ? 1 : 0;
      m[static_cast<std::size_t>(n_qubits_ + q)][static_cast<std::size_t>(j)] =
          cols_[static_cast<std::size_t>(j)].x_bit(q) ? 1 : 0;
    }
  }
  return m;
}

}  // namespace paulimc
