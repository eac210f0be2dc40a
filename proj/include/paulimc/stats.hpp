#pragma once

#include <string>
#include <vector>

#include "paulimc/partition.hpp"
#include "paulimc/simulator.hpp"

namespace paulimc {

// Covariance matrix of a family of +/-1 Pauli observables under one state,
// either exact or estimated from shots. Symmetric; diagonal entries are
// the variances.
struct CovarianceMatrix {
  enum class Provenance { theoretical, sample };

  std::vector<std::string> labels;  // signed strings, e.g. "-XX"
  std::vector<double> entries;      // row-major dim x dim
  int dim = 0;
  Provenance provenance = Provenance::theoretical;
  long n_shots = 0;  // meaningful for sample provenance

  double at(int i, int j) const;
};

// Exact Cov(M_i, M_j) = <M_i M_j> - <M_i><M_j>. The observables carry
// their signs. Pairwise commutation is required so each product is itself
// a signed Pauli; violations raise NotCommuting.
CovarianceMatrix theoretical_covariance(const StateVector& state,
                                        const std::vector<PauliString>& observables);

// Unbiased sample covariance (n-1 denominator) of a +/-1 outcome table.
// Needs at least two shots.
CovarianceMatrix sample_covariance(const OutcomeTable& table);

// Variance of the family sum: the full quadratic form over the matrix,
// sum of every entry (diagonal variances plus both covariance triangles),
// optionally weighted per member (w_i w_j scaling). Weights default to 1,
// the unit-coefficient case.
double family_variance(const CovarianceMatrix& cov,
                       const std::vector<double>* weights = nullptr);

// Expected number of state preparations to reach accuracy epsilon with a
// k-way partitioning under equal shot allocation: k * sum(Var_i) / eps^2.
double n_expect(const std::vector<double>& partition_variances, double epsilon);

// Verdict on refining a partitioning from k to k' families. Broken terms
// are the covariance entries between members separated by the refinement
// (both triangles); unbroken terms are every surviving entry, diagonals
// included. The refinement wins when k * sum(broken) exceeds (k' - k) *
// sum(unbroken); margin is the signed difference of those two sides.
struct SplitDecision {
  bool split = false;
  double margin = 0.0;
  double broken_sum = 0.0;
  double unbroken_sum = 0.0;
  int k = 0;
  int k_prime = 0;
};

// family_covariances[f] must describe full.families[f] in member order;
// the matrices must share provenance. proposal must refine full (every
// proposal family inside one full family, same term universe), otherwise
// NotARefinement. Optional weights follow term indices of the Hamiltonian
// the partitions describe.
SplitDecision split_decision(const std::vector<CovarianceMatrix>& family_covariances,
                             const PartitionSet& full, const PartitionSet& proposal,
                             const std::vector<double>* term_weights = nullptr);

// Sample-based splitting is acted on only after a fixed burn-in of shots;
// below it, estimates are reported but not trusted for decisions.
inline constexpr int kDefaultBurnInShots = 30;

}  // namespace paulimc
