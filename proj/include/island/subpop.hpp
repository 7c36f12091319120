#pragma once
// Heterogeneous population with known point frequencies per subpopulation.
// The criminal is uniform within its subpopulation; the suspect is identified
// by the index of its subpopulation only.

#include <vector>

#include "island/core.hpp"
#include "island/population.hpp"

namespace island::subpop {

/// alpha_i = P(C in X_i | I) = p_i beta_i / sum_j p_j beta_j.
std::vector<Probability> alpha_from_beta(const PopulationModel& model);

/// Posterior odds for a suspect in subpopulation `s`, decomposed as
/// LR 1/p_s (conditional on I) times prior odds alpha_s / (N_s - alpha_s).
OddsResult hetero_posterior_odds(const PopulationModel& model, std::size_t s);

/// The same posterior odds reached through the joint convention:
/// LR (N_s - beta_s)/(N_s sum p_j beta_j - p_s beta_s) times beta_s/(N_s - beta_s).
OddsResult hetero_posterior_odds_joint(const PopulationModel& model, std::size_t s);

LikelihoodRatio hetero_lr(const PopulationModel& model, std::size_t s, LrConvention convention);

enum class MarginalWeights {
    /// w_s = P(Gamma_s = 1 | I), which accounts for the suspect possibly being
    /// the criminal. Exact.
    exact,
    /// w_s = p_s. Drops the P(C=s|I) term; indistinguishable from `exact` once
    /// every N_s p_s is large but visibly different in small populations.
    trait_frequency,
};

/// P(G | I, E) for a suspect drawn uniformly from the whole population.
Probability hetero_posterior_marginal(const PopulationModel& model, MarginalWeights weights = MarginalWeights::exact);

/// E(U | I, C in X_s) = sum_i N_i p_i + 1 - p_s; requires beta_i = N_i / N.
double hetero_expected_bearers(const PopulationModel& model, std::size_t s);

}  // namespace island::subpop
