#pragma once
// Unknown trait frequency W. Moments p, p', p'' of the three stage densities,
// the density transforms between stages, and posterior probabilities for a
// homogeneous population, for a suspect of known subpopulation and for a
// suspect whose subpopulation is itself uncertain.

#include <cstdint>
#include <optional>
#include <vector>

#include "island/core.hpp"
#include "island/density.hpp"
#include "island/population.hpp"

namespace island::uncertain {

enum class Direction {
    crime_to_suspect,  // chi -> chi_I
    suspect_to_match,  // chi_I -> chi_{I,E}, needs N
    match_to_suspect,  // chi_{I,E} -> chi_I
    suspect_to_crime,  // chi_I -> chi
};

/// `n` is required for suspect_to_match; match_to_suspect takes N from the
/// density's context and rejects a conflicting `n`.
FrequencyDensity transform_density(const FrequencyDensity& d, Direction direction,
                                   std::optional<std::uint64_t> n = std::nullopt,
                                   int resolution = kDefaultResolution);

struct FrequencyMoments {
    double p = 0.0;
    double sigma2 = 0.0;
    double p_prime = 0.0;
    std::optional<double> p_double_prime;
};

/// Moments of a prior-to-crime frequency. p'' is filled in when `n` is given.
FrequencyMoments frequency_moments(const FrequencySpec& freq, std::optional<std::uint64_t> n = std::nullopt);

/// Homogeneous population of N+1 with uncertain frequency: probability
/// 1/(1+N p'), LR 1/p' conditional on I.
OddsResult uncertain_posterior(std::uint64_t n, const FrequencySpec& freq);

/// P(G | I, E) for a suspect in subpopulation `s`. `large_n` selects the
/// large-population approximation.
Probability uncertain_subpop_posterior(const PopulationModel& model, std::size_t s, bool large_n = false);

/// Which exact ratio the large_N convention approximates.
enum class LargeNBase { joint, conditional };

LikelihoodRatio uncertain_subpop_lr(const PopulationModel& model, std::size_t s, LrConvention convention,
                                    LargeNBase base = LargeNBase::joint);

/// P(S in X_i | I, E) for every i; needs epsilon.
std::vector<Probability> suspect_subpop_posterior(const PopulationModel& model);

/// P(G | I, E) when the suspect's subpopulation is unknown; needs epsilon.
Probability unknown_subpop_posterior(const PopulationModel& model);

/// Pools all subpopulations and uses the first one's frequency.
Probability naive_homogeneous_posterior(const PopulationModel& model);

/// E(U | I) = integral of chi_I(t)(1+Nt), by quadrature.
double expected_bearers_given_I(std::uint64_t n, const FrequencyDensity& prior, int resolution = kDefaultResolution);

/// E(1/U | I, E) by quadrature over W and an explicit sum over bearer counts.
/// Limited to N <= 2000.
double expected_inverse_bearers_given_I_E(std::uint64_t n, const FrequencyDensity& prior,
                                          int resolution = kDefaultResolution);

}  // namespace island::uncertain
