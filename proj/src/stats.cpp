#include "paulimc/stats.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "paulimc/error.hpp"

namespace paulimc {

double CovarianceMatrix::at(int i, int j) const {
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    fail(Errc::index_out_of_range, "covariance index out of range");
  return entries[static_cast<std::size_t>(i) * dim + j];
}

CovarianceMatrix theoretical_covariance(const StateVector& state,
                                        const std::vector<PauliString>& observables) {
  if (observables.empty()) fail(Errc::empty_string, "empty observable family");
  const int dim = static_cast<int>(observables.size());
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (!commutes_gc(observables[i], observables[j]))
        fail(Errc::not_commuting, "covariance requires a commuting family: " +
                                      observables[i].signed_str() + " vs " +
                                      observables[j].signed_str());

  std::vector<double> means(observables.size());
  for (std::size_t i = 0; i < observables.size(); ++i)
    means[i] = state.expectation(observables[i]);

  CovarianceMatrix cov;
  cov.dim = dim;
  cov.provenance = CovarianceMatrix::Provenance::theoretical;
  cov.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  for (const auto& o : observables) cov.labels.push_back(o.signed_str());

  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const PauliString prod = multiply(observables[i], observables[j]);
      const double second_moment = prod.is_identity()
                                       ? static_cast<double>(prod.sign())
                                       : state.expectation(prod);
      const double value = second_moment - means[i] * means[j];
      cov.entries[static_cast<std::size_t>(i) * dim + j] = value;
      cov.entries[static_cast<std::size_t>(j) * dim + i] = value;
    }
  }
  return cov;
}

CovarianceMatrix sample_covariance(const OutcomeTable& table) {
  if (table.shots < 2)
    fail(Errc::insufficient_shots, "sample covariance needs at least 2 shots");
  const int dim = static_cast<int>(table.columns.size());
  if (dim == 0) fail(Errc::empty_string, "empty outcome table");

  const double n = static_cast<double>(table.shots);
  std::vector<double> means(table.columns.size(), 0.0);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    double acc = 0.0;
    for (std::int8_t v : table.columns[i]) acc += v;
    means[i] = acc / n;
  }

  CovarianceMatrix cov;
  cov.dim = dim;
  cov.provenance = CovarianceMatrix::Provenance::sample;
  cov.n_shots = table.shots;
  cov.labels = table.labels;
  cov.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      double acc = 0.0;
      for (int s = 0; s < table.shots; ++s)
        acc += (table.columns[i][s] - means[i]) * (table.columns[j][s] - means[j]);
      const double value = acc / (n - 1.0);
      cov.entries[static_cast<std::size_t>(i) * dim + j] = value;
      cov.entries[static_cast<std::size_t>(j) * dim + i] = value;
    }
  }
  return cov;
}

double family_variance(const CovarianceMatrix& cov, const std::vector<double>* weights) {
  if (weights && static_cast<int>(weights->size()) != cov.dim)
    fail(Errc::length_mismatch, "weight count does not match covariance dimension");
  double total = 0.0;
  for (int i = 0; i < cov.dim; ++i) {
    for (int j = 0; j < cov.dim; ++j) {
      const double w = weights ? (*weights)[i] * (*weights)[j] : 1.0;
      total += w * cov.entries[static_cast<std::size_t>(i) * cov.dim + j];
    }
  }
  return total;
}

double n_expect(const std::vector<double>& partition_variances, double epsilon) {
  if (epsilon <= 0.0) fail(Errc::non_positive_epsilon, "epsilon must be positive");
  if (partition_variances.empty()) fail(Errc::empty_string, "no partition variances");
  double total = 0.0;
  for (double v : partition_variances) total += v;
  const double k = static_cast<double>(partition_variances.size());
  return k * total / (epsilon * epsilon);
}

namespace {

// Index of the family each term belongs to, or fail if the families do not
// cover every term exactly once.
std::vector<int> owner_of(const PartitionSet& p, const char* which) {
  std::vector<int> owner(static_cast<std::size_t>(p.n_terms), -1);
  for (std::size_t f = 0; f < p.families.size(); ++f) {
    for (int t : p.families[f]) {
      if (t < 0 || t >= p.n_terms)
        fail(Errc::index_out_of_range, std::string(which) + " partition has a bad term index");
      if (owner[static_cast<std::size_t>(t)] != -1)
        fail(Errc::not_a_refinement, std::string(which) + " partition repeats a term");
      owner[static_cast<std::size_t>(t)] = static_cast<int>(f);
    }
  }
  for (int o : owner)
    if (o == -1) fail(Errc::not_a_refinement, std::string(which) + " partition misses a term");
  return owner;
}

}  // namespace

SplitDecision split_decision(const std::vector<CovarianceMatrix>& family_covariances,
                             const PartitionSet& full, const PartitionSet& proposal,
                             const std::vector<double>* term_weights) {
  if (full.n_terms != proposal.n_terms)
    fail(Errc::not_a_refinement, "partitions describe different term counts");
  if (family_covariances.size() != full.families.size())
    fail(Errc::length_mismatch, "one covariance matrix per family is required");
  for (std::size_t f = 0; f < full.families.size(); ++f)
    if (family_covariances[f].dim != static_cast<int>(full.families[f].size()))
      fail(Errc::length_mismatch, "covariance dimension does not match family size");
  if (!family_covariances.empty()) {
    const auto provenance = family_covariances.front().provenance;
    for (const auto& cov : family_covariances)
      if (cov.provenance != provenance)
        fail(Errc::not_a_refinement, "covariance matrices mix provenance");
  }
  if (term_weights && static_cast<int>(term_weights->size()) != full.n_terms)
    fail(Errc::length_mismatch, "weight count does not match term count");

  const std::vector<int> full_owner = owner_of(full, "full");
  const std::vector<int> proposal_owner = owner_of(proposal, "proposal");

  // Every proposal family must sit inside a single full family.
  for (const auto& family : proposal.families) {
    for (std::size_t m = 1; m < family.size(); ++m) {
      if (full_owner[static_cast<std::size_t>(family[m])] !=
          full_owner[static_cast<std::size_t>(family[0])])
        fail(Errc::not_a_refinement, "proposal family straddles two original families");
    }
  }

  // Position of each term inside its full family, to index the covariance.
  std::vector<int> slot(static_cast<std::size_t>(full.n_terms), -1);
  for (const auto& family : full.families)
    for (std::size_t m = 0; m < family.size(); ++m)
      slot[static_cast<std::size_t>(family[m])] = static_cast<int>(m);

  const auto weight = [&](int term) {
    return term_weights ? (*term_weights)[static_cast<std::size_t>(term)] : 1.0;
  };

  double broken = 0.0;
  double unbroken = 0.0;
  for (std::size_t f = 0; f < full.families.size(); ++f) {
    const auto& family = full.families[f];
    const auto& cov = family_covariances[f];
    for (int a : family) {
      for (int b : family) {
        const double entry =
            weight(a) * weight(b) *
            cov.at(slot[static_cast<std::size_t>(a)], slot[static_cast<std::size_t>(b)]);
        if (proposal_owner[static_cast<std::size_t>(a)] ==
            proposal_owner[static_cast<std::size_t>(b)]) {
          unbroken += entry;  // survives refinement, diagonal included
        } else {
          broken += entry;  // ordered pairs: both triangles accumulate
        }
      }
    }
  }

  SplitDecision decision;
  decision.k = full.num_partitions();
  decision.k_prime = proposal.num_partitions();
  if (decision.k_prime < decision.k)
    fail(Errc::not_a_refinement, "proposal has fewer families than the original");
  decision.broken_sum = broken;
  decision.unbroken_sum = unbroken;
  decision.margin =
      decision.k * broken - static_cast<double>(decision.k_prime - decision.k) * unbroken;
  decision.split = decision.margin > 0.0;
  return decision;
}

}  // namespace paulimc
