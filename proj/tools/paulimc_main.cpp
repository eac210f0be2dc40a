// paulimc: partition Pauli Hamiltonians into simultaneously measurable
// families, synthesize the measurement circuits, and quantify the payoff.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "paulimc/error.hpp"
#include "paulimc/fermion.hpp"
#include "paulimc/graph.hpp"
#include "paulimc/partition.hpp"
#include "paulimc/pauli.hpp"
#include "paulimc/reduction.hpp"
#include "paulimc/simulator.hpp"
#include "paulimc/stats.hpp"
#include "paulimc/synth.hpp"
#include "paulimc/tableau.hpp"

namespace {

using namespace paulimc;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_commuting:
    case Errc::not_diagonalized:
    case Errc::not_a_refinement:
      return kExitVerificationFailure;
    default:
      return kExitInputError;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(Errc::io_error, "write failed for " + path);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

class StageTimer {
 public:
  StageTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Resolves the report's families to the Hamiltonian's strings, refusing a
// report that does not describe this Hamiltonian.
std::vector<std::vector<PauliString>> family_members(const PartitionReport& report,
                                                     const Hamiltonian& h) {
  if (report.partition.n_terms != h.n_terms())
    fail(Errc::length_mismatch, "partition report describes " +
                                    std::to_string(report.partition.n_terms) +
                                    " terms but the Hamiltonian has " +
                                    std::to_string(h.n_terms()));
  std::vector<std::vector<PauliString>> families;
  for (std::size_t f = 0; f < report.partition.families.size(); ++f) {
    std::vector<PauliString> members;
    const auto& indices = report.partition.families[f];
    for (std::size_t m = 0; m < indices.size(); ++m) {
      const int idx = indices[m];
      if (idx < 0 || idx >= h.n_terms())
        fail(Errc::index_out_of_range, "partition report references term " + std::to_string(idx));
      const PauliString& p = h.term(idx).pauli;
      if (f < report.family_strings.size() && m < report.family_strings[f].size() &&
          report.family_strings[f][m] != p.letters())
        fail(Errc::not_commuting, "partition report string " + report.family_strings[f][m] +
                                      " does not match Hamiltonian term " + p.letters());
      members.push_back(p);
    }
    families.push_back(std::move(members));
  }
  return families;
}

std::string circuit_path(const std::string& dir, std::size_t family) {
  return (std::filesystem::path(dir) / ("family_" + std::to_string(family) + ".circuit")).string();
}

std::string map_path(const std::string& dir, std::size_t family) {
  return (std::filesystem::path(dir) / ("family_" + std::to_string(family) + ".map.json"))
      .string();
}

struct SynthesizedFamily {
  Circuit circuit;
  MeasurementMap map;
  bool rotation_only = false;
};

SynthesizedFamily synthesize_family(const std::vector<PauliString>& members, bool elide) {
  const BasisExtraction basis = extract_basis(members);
  const SynthesisResult synth = synthesize(basis.tableau);
  SynthesizedFamily out{synth.circuit, build_measurement_map(members, basis, synth),
                        synth.rotation_only};
  if (elide) {
    auto [circuit, map] = elide_swaps(out.circuit, out.map);
    out.circuit = std::move(circuit);
    out.map = std::move(map);
  }
  return out;
}

// Signed observables and |coefficient| weights for one family: the sign of
// each coefficient folds into the measured operator, its magnitude weights
// the variance quadratic form.
struct SignedFamily {
  std::vector<PauliString> observables;
  std::vector<double> weights;
};

SignedFamily signed_family(const std::vector<int>& indices, const Hamiltonian& h) {
  SignedFamily out;
  for (int idx : indices) {
    const HamiltonianTerm& term = h.term(idx);
    out.observables.push_back(term.coefficient < 0 ? term.pauli.negated() : term.pauli);
    out.weights.push_back(std::fabs(term.coefficient));
  }
  return out;
}

nlohmann::json covariance_to_json(const CovarianceMatrix& cov) {
  nlohmann::json j;
  j["labels"] = cov.labels;
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(cov.dim));
  for (int i = 0; i < cov.dim; ++i)
    for (int k = 0; k < cov.dim; ++k) rows[static_cast<std::size_t>(i)].push_back(cov.at(i, k));
  j["entries"] = rows;
  j["provenance"] = cov.provenance == CovarianceMatrix::Provenance::theoretical
                        ? "theoretical"
                        : "sample";
  if (cov.provenance == CovarianceMatrix::Provenance::sample) j["n_shots"] = cov.n_shots;
  return j;
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs {
  std::string input;
  std::string mode = "gc";
  std::string algo = "greedy";
  std::string encoding;
  std::string out;
  std::string ham_out;
  std::string format = "json";
};

int run_partition(const PartitionArgs& args) {
  PartitionReport report;
  std::optional<Hamiltonian> h;

  if (args.algo == "structural") {
    if (args.encoding.empty())
      fail(Errc::parse_error, "--algo structural requires --encoding {jw|parity}");
    const auto terms = load_fermion_file(args.input);
    const StageTimer timer;
    StructuralPartition sp = partition_structural(terms, encoding_from_name(args.encoding));
    const double ms = timer.elapsed_ms();
    report = make_report(sp.partition, sp.hamiltonian, "structural", ms);
    if (!args.ham_out.empty()) {
      std::ostringstream text;
      text << "# constant offset: " << sp.constant_offset << "\n" << sp.hamiltonian.to_text();
      write_file(args.ham_out, text.str());
    }
    h = std::move(sp.hamiltonian);
  } else {
    h = Hamiltonian::load(args.input);
    const StageTimer timer;
    PartitionSet partition;
    if (args.algo == "naive") {
      partition = partition_naive(*h);
    } else {
      const CommutationGraph graph = build_graph(*h, mode_from_name(args.mode));
      partition = args.algo == "greedy" ? partition_greedy(graph) : partition_bron_kerbosch(graph);
    }
    report = make_report(partition, *h, args.algo, timer.elapsed_ms());
    if (!args.ham_out.empty()) write_file(args.ham_out, h->to_text());
  }

  const VerifyResult check = verify_partition(report.partition, *h);
  if (!check) fail(Errc::not_commuting, "produced partition failed verification: " + check.detail);

  if (args.format == "text") {
    std::ostringstream text;
    text << "mode " << mode_name(report.partition.mode) << ", algorithm " << report.algorithm
         << ": " << report.partition.num_partitions() << " families over "
         << report.partition.n_terms << " terms (" << report.wall_time_ms << " ms)\n";
    for (std::size_t f = 0; f < report.family_strings.size(); ++f) {
      text << "  family " << f << ":";
      for (const auto& s : report.family_strings[f]) text << " " << s;
      text << "\n";
    }
    emit(args.out, text.str());
  } else {
    emit(args.out, report_to_json(report));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// encode

struct EncodeArgs {
  std::string input;
  std::string encoding;
  std::string out;
  std::string report_out;
};

int run_encode(const EncodeArgs& args) {
  const auto terms = load_fermion_file(args.input);
  const StageTimer timer;
  const StructuralPartition sp = partition_structural(terms, encoding_from_name(args.encoding));
  const double ms = timer.elapsed_ms();

  std::ostringstream text;
  text << "# constant offset: " << sp.constant_offset << "\n" << sp.hamiltonian.to_text();
  emit(args.out, text.str());

  if (!args.report_out.empty()) {
    const PartitionReport report = make_report(sp.partition, sp.hamiltonian, "structural", ms);
    write_file(args.report_out, report_to_json(report));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synthesize

struct SynthesizeArgs {
  std::string hamiltonian;
  std::string report;
  std::string out_dir;
  bool elide = false;
};

int run_synthesize(const SynthesizeArgs& args) {
  const Hamiltonian h = Hamiltonian::load(args.hamiltonian);
  const PartitionReport report = load_report(args.report);
  const auto families = family_members(report, h);

  std::error_code ec;
  std::filesystem::create_directories(args.out_dir, ec);
  if (ec) fail(Errc::io_error, "cannot create " + args.out_dir + ": " + ec.message());

  for (std::size_t f = 0; f < families.size(); ++f) {
    const SynthesizedFamily result = synthesize_family(families[f], args.elide);
    write_file(circuit_path(args.out_dir, f), result.circuit.to_text());
    write_file(map_path(args.out_dir, f), map_to_json(result.map));
    std::cout << "family " << f << ": " << families[f].size() << " members, "
              << result.circuit.gates.size() << " gates ("
              << result.circuit.entangling_gate_count() << " entangling"
              << (result.rotation_only ? ", rotation-only" : "") << ")\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string hamiltonian;
  std::string report;
  std::string circuits_dir;
  std::uint64_t seed = 7;
  int n_states = 3;
};

// Signed all-Z string over `bits`, for reading a mapped member off the
// rotated state.
PauliString z_product(int n_qubits, const std::vector<int>& bits, int sign) {
  PauliString p = PauliString::identity(n_qubits);
  for (int b : bits) p.set_letter(b, 'Z');
  return sign < 0 ? p.negated() : p;
}

int run_verify(const VerifyArgs& args) {
  const Hamiltonian h = Hamiltonian::load(args.hamiltonian);
  const PartitionReport report = load_report(args.report);
  const auto families = family_members(report, h);

  std::vector<std::string> failures;
  const auto flag = [&failures](const std::string& detail) { failures.push_back(detail); };

  std::vector<Circuit> circuits;
  std::vector<MeasurementMap> maps;
  for (std::size_t f = 0; f < families.size(); ++f) {
    Circuit circuit = Circuit::load(circuit_path(args.circuits_dir, f));
    MeasurementMap map = load_map(map_path(args.circuits_dir, f));
    const auto& members = families[f];
    if (map.members.size() != members.size()) {
      flag("family " + std::to_string(f) + ": map lists " + std::to_string(map.members.size()) +
           " members, expected " + std::to_string(members.size()));
      circuits.push_back(std::move(circuit));
      maps.push_back(std::move(map));
      continue;
    }

    // Symbolic check: every member must conjugate to the signed Z-product
    // the map claims.
    for (std::size_t m = 0; m < members.size(); ++m) {
      const std::string where = "family " + std::to_string(f) + " member " + members[m].letters();
      if (map.members[m].member != members[m].letters())
        flag(where + ": map lists " + map.members[m].member + " instead");
      PauliString image;
      try {
        image = conjugate_through(members[m], circuit);
      } catch (const Error& e) {
        flag(where + ": conjugation failed: " + e.what());
        continue;
      }
      if (!image.is_diagonal()) {
        flag(where + ": NotDiagonalized: image " + image.signed_str() + " is not all-I/Z");
        continue;
      }
      const PauliString claimed =
          z_product(h.n_qubits(), map.members[m].bits, map.members[m].sign);
      if (!(image == claimed))
        flag(where + ": image " + image.signed_str() + " != mapped " + claimed.signed_str());
    }
    circuits.push_back(std::move(circuit));
    maps.push_back(std::move(map));
  }

  // Statevector check: mapped readout expectations must reproduce the
  // direct expectations on random states, member by member and summed
  // into <H>.
  if (h.n_qubits() <= 16 && failures.empty()) {
    for (int trial = 0; trial < args.n_states; ++trial) {
      const StateVector psi = StateVector::haar_random(h.n_qubits(), args.seed + trial);
      double direct_energy = 0.0;
      double mapped_energy = 0.0;
      for (std::size_t f = 0; f < families.size(); ++f) {
        const StateVector rotated = apply_circuit(psi, circuits[f]);
        for (std::size_t m = 0; m < families[f].size(); ++m) {
          const double direct = psi.expectation(families[f][m]);
          const double mapped = rotated.expectation(
              z_product(h.n_qubits(), maps[f].members[m].bits, maps[f].members[m].sign));
          if (std::fabs(direct - mapped) > 1e-9)
            flag("family " + std::to_string(f) + " member " + families[f][m].letters() +
                 ": seed " + std::to_string(args.seed + trial) + " expectation " +
                 std::to_string(direct) + " vs mapped " + std::to_string(mapped));
          const double coeff = h.term(report.partition.families[f][m]).coefficient;
          direct_energy += coeff * direct;
          mapped_energy += coeff * mapped;
        }
      }
      if (std::fabs(direct_energy - mapped_energy) > 1e-9)
        flag("total energy mismatch on seed " + std::to_string(args.seed + trial));
    }
  }

  if (failures.empty()) {
    std::cout << "verification passed: " << families.size() << " families, "
              << h.n_terms() << " terms\n";
    return kExitOk;
  }
  for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
  std::cout << "verification failed: " << failures.size() << " finding(s)\n";
  return kExitVerificationFailure;
}

// ---------------------------------------------------------------------------
// stats

struct StatsArgs {
  std::string hamiltonian;
  std::string report;
  std::string proposal;
  std::string state_path;
  bool haar = false;
  std::uint64_t seed = 1;
  double epsilon = 0.0;
  int shots = 0;
  std::string out;
  std::string format = "json";
};

int run_stats(const StatsArgs& args) {
  const Hamiltonian h = Hamiltonian::load(args.hamiltonian);
  const PartitionReport report = load_report(args.report);
  family_members(report, h);  // consistency check

  if (args.haar == !args.state_path.empty())
    fail(Errc::parse_error, "exactly one of --state <file> or --haar is required");
  const StateVector state = args.haar ? StateVector::haar_random(h.n_qubits(), args.seed)
                                      : StateVector::load(args.state_path);
  if (state.n_qubits() != h.n_qubits())
    fail(Errc::qubit_count_mismatch, "state has " + std::to_string(state.n_qubits()) +
                                         " qubits, Hamiltonian has " +
                                         std::to_string(h.n_qubits()));

  nlohmann::json j;
  j["format_version"] = 1;
  j["state"] = args.haar ? "haar(seed=" + std::to_string(args.seed) + ")" : args.state_path;
  j["epsilon"] = args.epsilon;
  j["shots"] = args.shots;

  std::vector<CovarianceMatrix> family_covs;
  std::vector<double> variances;
  std::vector<double> term_weights(static_cast<std::size_t>(h.n_terms()), 0.0);
  for (int i = 0; i < h.n_terms(); ++i)
    term_weights[static_cast<std::size_t>(i)] = std::fabs(h.term(i).coefficient);

  nlohmann::json families_json = nlohmann::json::array();
  for (std::size_t f = 0; f < report.partition.families.size(); ++f) {
    const SignedFamily family = signed_family(report.partition.families[f], h);
    const CovarianceMatrix cov = theoretical_covariance(state, family.observables);
    const double variance = family_variance(cov, &family.weights);
    family_covs.push_back(cov);
    variances.push_back(variance);

    nlohmann::json fj;
    fj["index"] = f;
    fj["size"] = family.observables.size();
    fj["theoretical_covariance"] = covariance_to_json(cov);
    fj["variance"] = variance;

    if (args.shots > 0) {
      const SynthesizedFamily synth = synthesize_family(
          family_members(report, h)[f], /*elide=*/false);
      OutcomeTable table =
          sample_outcomes(state, synth.circuit, synth.map, args.shots, args.seed + 1000 + f);
      // Fold the coefficient signs so sampled columns estimate the same
      // signed observables the theoretical matrix describes.
      for (std::size_t m = 0; m < table.columns.size(); ++m) {
        if (h.term(report.partition.families[f][m]).coefficient < 0) {
          for (auto& v : table.columns[m]) v = static_cast<std::int8_t>(-v);
        }
        table.labels[m] = family.observables[m].signed_str();
      }
      const CovarianceMatrix sample = sample_covariance(table);
      fj["sample_covariance"] = covariance_to_json(sample);
      fj["sample_variance"] = family_variance(sample, &family.weights);
    }
    families_json.push_back(std::move(fj));
  }
  j["families"] = std::move(families_json);
  j["n_expect"] = n_expect(variances, args.epsilon);

  if (!args.proposal.empty()) {
    const PartitionReport proposal = load_report(args.proposal);
    family_members(proposal, h);  // consistency check
    const SplitDecision decision =
        split_decision(family_covs, report.partition, proposal.partition, &term_weights);

    std::vector<double> proposal_variances;
    for (const auto& indices : proposal.partition.families) {
      const SignedFamily family = signed_family(indices, h);
      proposal_variances.push_back(
          family_variance(theoretical_covariance(state, family.observables), &family.weights));
    }

    nlohmann::json pj;
    pj["k"] = decision.k;
    pj["k_prime"] = decision.k_prime;
    pj["broken_sum"] = decision.broken_sum;
    pj["unbroken_sum"] = decision.unbroken_sum;
    pj["margin"] = decision.margin;
    pj["decision"] = decision.split ? "SPLIT" : "KEEP";
    pj["n_expect"] = n_expect(proposal_variances, args.epsilon);
    pj["burn_in_shots"] = kDefaultBurnInShots;
    pj["sample_backed"] = args.shots >= kDefaultBurnInShots;
    j["proposal"] = std::move(pj);
  }

  if (args.format == "text") {
    std::ostringstream text;
    text << report.partition.num_partitions() << " families, n_expect = " << j["n_expect"].dump()
         << "\n";
    for (std::size_t f = 0; f < variances.size(); ++f)
      text << "  family " << f << ": variance " << variances[f] << "\n";
    if (j.contains("proposal"))
      text << "proposal: " << j["proposal"]["decision"].get<std::string>() << " (margin "
           << j["proposal"]["margin"].dump() << ", n_expect " << j["proposal"]["n_expect"].dump()
           << ")\n";
    emit(args.out, text.str());
  } else {
    emit(args.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reduce

struct ReduceArgs {
  std::string input;
  std::string out;
  bool cross = false;
};

int run_reduce(const ReduceArgs& args) {
  const SimpleGraph g = load_graph(args.input);
  const Hamiltonian h = reduce_to_mcp(g);
  emit(args.out, h.to_text());
  if (args.cross) {
    if (!cross_validate(g)) {
      std::cout << "cross-validation FAILED\n";
      return kExitVerificationFailure;
    }
    std::cout << "cross-validation passed: clique cover " << exact_clique_cover(g) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli measurement compiler: group, synthesize, verify, quantify"};
  app.require_subcommand(1);

  PartitionArgs partition_args;
  auto* partition_cmd =
      app.add_subcommand("partition", "Group Hamiltonian terms into commuting families");
  partition_cmd->add_option("input", partition_args.input, "Hamiltonian file (fermionic file for --algo structural)")
      ->required();
  partition_cmd->add_option("--mode", partition_args.mode, "Commutativity notion")
      ->check(CLI::IsMember({"qwc", "gc"}));
  partition_cmd->add_option("--algo", partition_args.algo, "Partitioning algorithm")
      ->check(CLI::IsMember({"naive", "greedy", "bk", "structural"}));
  partition_cmd->add_option("--encoding", partition_args.encoding, "Fermionic encoding (structural)")
      ->check(CLI::IsMember({"jw", "parity"}));
  partition_cmd->add_option("--out", partition_args.out, "Report path (stdout when absent)");
  partition_cmd->add_option("--ham-out", partition_args.ham_out,
                            "Write the (encoded or normalized) Hamiltonian here");
  partition_cmd->add_option("--format", partition_args.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  EncodeArgs encode_args;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a fermionic operator as Pauli strings");
  encode_cmd->add_option("input", encode_args.input, "Fermionic term file")->required();
  encode_cmd->add_option("--encoding", encode_args.encoding, "Fermionic encoding")
      ->check(CLI::IsMember({"jw", "parity"}))
      ->required();
  encode_cmd->add_option("--out", encode_args.out, "Hamiltonian path (stdout when absent)");
  encode_cmd->add_option("--report", encode_args.report_out,
                         "Also write the structural partition report here");

  SynthesizeArgs synth_args;
  auto* synth_cmd =
      app.add_subcommand("synthesize", "Emit a measurement circuit and map per family");
  synth_cmd->add_option("hamiltonian", synth_args.hamiltonian, "Hamiltonian file")->required();
  synth_cmd->add_option("report", synth_args.report, "Partition report JSON")->required();
  synth_cmd->add_option("--out", synth_args.out_dir, "Output directory")->required();
  synth_cmd->add_flag("--elide-swaps", synth_args.elide, "Remove SWAPs by relabeling wires");

  VerifyArgs verify_args;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check synthesized circuits and maps against the Hamiltonian");
  verify_cmd->add_option("hamiltonian", verify_args.hamiltonian, "Hamiltonian file")->required();
  verify_cmd->add_option("report", verify_args.report, "Partition report JSON")->required();
  verify_cmd->add_option("--circuits", verify_args.circuits_dir, "Directory from synthesize")
      ->required();
  verify_cmd->add_option("--seed", verify_args.seed, "Random-state seed");
  verify_cmd->add_option("--states", verify_args.n_states, "Random states to test")
      ->check(CLI::PositiveNumber);

  StatsArgs stats_args;
  auto* stats_cmd =
      app.add_subcommand("stats", "Covariances, shot-count estimates, and split decisions");
  stats_cmd->add_option("hamiltonian", stats_args.hamiltonian, "Hamiltonian file")->required();
  stats_cmd->add_option("report", stats_args.report, "Partition report JSON")->required();
  stats_cmd->add_option("--proposal", stats_args.proposal, "Refined partition report to judge");
  stats_cmd->add_option("--state", stats_args.state_path, "State amplitude file");
  stats_cmd->add_flag("--haar", stats_args.haar, "Draw a Haar-random state instead");
  stats_cmd->add_option("--seed", stats_args.seed, "Seed for --haar and sampling");
  stats_cmd->add_option("--epsilon", stats_args.epsilon, "Target accuracy")->required();
  stats_cmd->add_option("--shots", stats_args.shots, "Sampled shots per family (0 = theoretical only)")
      ->check(CLI::NonNegativeNumber);
  stats_cmd->add_option("--out", stats_args.out, "Report path (stdout when absent)");
  stats_cmd->add_option("--format", stats_args.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));

  ReduceArgs reduce_args;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Turn a graph into a grouping instance with known optimum");
  reduce_cmd->add_option("input", reduce_args.input, "Graph edge-list file")->required();
  reduce_cmd->add_option("--out", reduce_args.out, "Hamiltonian path (stdout when absent)");
  reduce_cmd->add_flag("--cross-validate", reduce_args.cross,
                       "Check cover size against the commuting-partition optimum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (partition_cmd->parsed()) return run_partition(partition_args);
    if (encode_cmd->parsed()) return run_encode(encode_args);
    if (synth_cmd->parsed()) return run_synthesize(synth_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (stats_cmd->parsed()) return run_stats(stats_args);
    if (reduce_cmd->parsed()) return run_reduce(reduce_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
