#include "paulimc/partition.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "paulimc/error.hpp"

namespace paulimc {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n, bool all_set) {
  Bits b(static_cast<std::size_t>((n + 63) / 64), 0);
  if (all_set) {
    for (int v = 0; v < n; ++v) b[v / 64] |= 1ull << (v % 64);
  }
  return b;
}

bool bit(const Bits& b, int v) { return (b[v / 64] >> (v % 64)) & 1u; }
void set_bit(Bits& b, int v) { b[v / 64] |= 1ull << (v % 64); }
void clear_bit(Bits& b, int v) { b[v / 64] &= ~(1ull << (v % 64)); }

bool any(const Bits& b) {
  for (std::uint64_t w : b) {
    if (w) return true;
  }
  return false;
}

int count(const Bits& b) {
  int total = 0;
  for (std::uint64_t w : b) total += std::popcount(w);
  return total;
}

int count_and(const Bits& a, const Bits& b) {
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

Bits and_bits(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) r[w] = a[w] & b[w];
  return r;
}

// Lowest set bit index, or -1.
int first_bit(const Bits& b) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    if (b[w]) return static_cast<int>(w * 64) + std::countr_zero(b[w]);
  }
  return -1;
}

std::vector<int> to_vector(const Bits& b) {
  std::vector<int> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word) {
      int low = std::countr_zero(word);
      out.push_back(static_cast<int>(w * 64) + low);
      word &= word - 1;
    }
  }
  return out;
}

// Exact maximum clique of the subgraph induced by the vertices in "alive",
// Bron-Kerbosch with pivoting. The first maximum encountered is kept
// (candidates scanned ascending), so the result is deterministic.
class MaxCliqueFinder {
 public:
  MaxCliqueFinder(const CommutationGraph& g, const Bits& alive)
      : g_(g), alive_(alive) {}

  std::vector<int> run() {
    best_.clear();
    std::vector<int> r;
    Bits p = alive_;
    Bits x = make_bits(g_.n_vertices(), false);
    expand(r, p, x);
    return best_;
  }

 private:
  Bits masked_row(int v) const { return and_bits(g_.row(v), alive_); }

  void expand(std::vector<int>& r, Bits p, Bits x) {
    if (!any(p) && !any(x)) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    // Pivot: vertex of P union X with the most neighbours in P.
    int pivot = -1, pivot_score = -1;
    for (const Bits* side : {&p, &x}) {
      for (int v : to_vector(*side)) {
        int score = count_and(masked_row(v), p);
        if (score > pivot_score) {
          pivot_score = score;
          pivot = v;
        }
      }
    }
    Bits pivot_row = masked_row(pivot);
    Bits ext(p.size());
    for (std::size_t w = 0; w < p.size(); ++w) ext[w] = p[w] & ~pivot_row[w];
    for (int v : to_vector(ext)) {
      Bits row = masked_row(v);
      r.push_back(v);
      expand(r, and_bits(p, row), and_bits(x, row));
      r.pop_back();
      clear_bit(p, v);
      set_bit(x, v);
    }
  }

  const CommutationGraph& g_;
  const Bits& alive_;
  std::vector<int> best_;
};

}  // namespace

PartitionSet partition_naive(const Hamiltonian& h) {
  PartitionSet p;
  p.mode = Mode::naive;
  p.n_terms = h.n_terms();
  for (int i = 0; i < h.n_terms(); ++i) p.families.push_back({i});
  return p;
}

PartitionSet partition_greedy(const CommutationGraph& g) {
  const int n = g.n_vertices();
  PartitionSet out;
  out.mode = g.mode();
  out.n_terms = n;

  Bits unassigned = make_bits(n, true);
  while (any(unassigned)) {
    // Seed: highest residual degree among unassigned, ties to lowest index.
    int seed = -1, seed_deg = -1;
    for (int v : to_vector(unassigned)) {
      int deg = count_and(g.row(v), unassigned);
      if (deg > seed_deg) {
        seed_deg = deg;
        seed = v;
      }
    }
    std::vector<int> family{seed};
    clear_bit(unassigned, seed);
    Bits cands = and_bits(g.row(seed), unassigned);
    while (any(cands)) {
      int best = -1, best_score = -1;
      for (int c : to_vector(cands)) {
        int score = count_and(g.row(c), cands);  // c's own bit is never set
        if (score > best_score) {
          best_score = score;
          best = c;
        }
      }
      family.push_back(best);
      clear_bit(unassigned, best);
      cands = and_bits(cands, g.row(best));
    }
    std::sort(family.begin(), family.end());
    out.families.push_back(std::move(family));
  }
  return out;
}

PartitionSet partition_bron_kerbosch(const CommutationGraph& g, int max_vertices) {
  const int n = g.n_vertices();
  if (n > max_vertices) {
    fail(Errc::too_large, std::to_string(n) + " vertices exceeds the exact-search limit of " +
                              std::to_string(max_vertices));
  }
  PartitionSet out;
  out.mode = g.mode();
  out.n_terms = n;

  Bits alive = make_bits(n, true);
  while (any(alive)) {
    // Isolated-in-residual vertices still come out as singleton cliques.
    MaxCliqueFinder finder(g, alive);
    std::vector<int> clique = finder.run();
    if (clique.empty()) {
      clique.push_back(first_bit(alive));
    }
    std::sort(clique.begin(), clique.end());
    for (int v : clique) clear_bit(alive, v);
    out.families.push_back(std::move(clique));
  }
  return out;
}

VerifyResult verify_partition(const PartitionSet& p, const Hamiltonian& h) {
  auto reject = [](std::string why) { return VerifyResult{false, std::move(why)}; };

  if (p.n_terms != h.n_terms()) {
    return reject("partition covers " + std::to_string(p.n_terms) +
                  " terms but the Hamiltonian has " + std::to_string(h.n_terms()));
  }
  std::vector<int> owner(static_cast<std::size_t>(h.n_terms()), -1);
  for (std::size_t f = 0; f < p.families.size(); ++f) {
    const auto& family = p.families[f];
    if (family.empty()) return reject("family " + std::to_string(f) + " is empty");
    for (int idx : family) {
      if (idx < 0 || idx >= h.n_terms()) {
        return reject("family " + std::to_string(f) + " references term " +
                      std::to_string(idx) + " which does not exist");
      }
      if (owner[static_cast<std::size_t>(idx)] != -1) {
        return reject("term " + std::to_string(idx) + " appears in families " +
                      std::to_string(owner[static_cast<std::size_t>(idx)]) + " and " +
                      std::to_string(f));
      }
      owner[static_cast<std::size_t>(idx)] = static_cast<int>(f);
    }
  }
  for (int i = 0; i < h.n_terms(); ++i) {
    if (owner[static_cast<std::size_t>(i)] == -1) {
      return reject("term " + std::to_string(i) + " is not covered by any family");
    }
  }
  if (p.mode == Mode::naive) {
    for (std::size_t f = 0; f < p.families.size(); ++f) {
      if (p.families[f].size() != 1) {
        return reject("naive family " + std::to_string(f) + " is not a singleton");
      }
    }
    return VerifyResult{};
  }
  for (std::size_t f = 0; f < p.families.size(); ++f) {
    const auto& family = p.families[f];
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        const PauliString& a = h.term(family[i]).pauli;
        const PauliString& b = h.term(family[j]).pauli;
        bool ok = p.mode == Mode::qwc ? commutes_qwc(a, b) : commutes_gc(a, b);
        if (!ok) {
          return reject("family " + std::to_string(f) + ": " + a.letters() + " and " +
                        b.letters() + " are not " + mode_name(p.mode) + "-compatible");
        }
      }
    }
  }
  return VerifyResult{};
}

PartitionReport make_report(const PartitionSet& p, const Hamiltonian& h,
                            const std::string& algorithm, double wall_time_ms) {
  PartitionReport report;
  report.partition = p;
  report.algorithm = algorithm;
  report.wall_time_ms = wall_time_ms;
  for (const auto& family : p.families) {
    std::vector<std::string> strings;
    strings.reserve(family.size());
    for (int idx : family) strings.push_back(h.term(idx).pauli.letters());
    report.family_strings.push_back(std::move(strings));
  }
  return report;
}

std::string report_to_json(const PartitionReport& report) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["mode"] = mode_name(report.partition.mode);
  j["algorithm"] = report.algorithm;
  j["n_terms"] = report.partition.n_terms;
  j["num_partitions"] = report.partition.num_partitions();
  j["families"] = report.partition.families;
  j["family_strings"] = report.family_strings;
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

PartitionReport report_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("partition report: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != 1) {
      fail(Errc::parse_error, "unsupported partition report format_version");
    }
    PartitionReport report;
    report.partition.mode = mode_from_name(j.at("mode").get<std::string>());
    report.partition.n_terms = j.at("n_terms").get<int>();
    report.partition.families = j.at("families").get<std::vector<std::vector<int>>>();
    report.algorithm = j.at("algorithm").get<std::string>();
    report.family_strings =
        j.at("family_strings").get<std::vector<std::vector<std::string>>>();
    report.wall_time_ms = j.value("wall_time_ms", 0.0);
    if (report.family_strings.size() != report.partition.families.size()) {
      fail(Errc::parse_error, "families and family_strings disagree in length");
    }
    for (std::size_t f = 0; f < report.partition.families.size(); ++f) {
      if (report.family_strings[f].size() != report.partition.families[f].size()) {
        fail(Errc::parse_error,
             "family " + std::to_string(f) + " and its strings disagree in length");
      }
      for (int idx : report.partition.families[f]) {
        if (idx < 0 || idx >= report.partition.n_terms) {
          fail(Errc::parse_error,
               "family " + std::to_string(f) + " references term " + std::to_string(idx) +
                   " outside n_terms");
        }
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("partition report: ") + e.what());
  }
}

PartitionReport load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return report_from_json(buffer.str());
}

}  // namespace paulimc
