#pragma once
// Homogeneous island problem: N+1 individuals, each a trait bearer with
// probability p, criminal uniform and independent of the suspect.

#include <cstdint>
#include <vector>

#include "island/core.hpp"

namespace island::classical {

enum class BearerConditioning { unconditioned, given_I, given_I_and_E };

/// Largest N for which the bearer-count distribution is materialized.
inline constexpr std::uint64_t kMaxMaterializedN = 1'000'000;

/// Distribution of U, the number of trait bearers among the N+1 individuals.
class BearerDistribution {
public:
    BearerDistribution(std::uint64_t n, double p, BearerConditioning conditioning);

    BearerConditioning conditioning() const noexcept { return conditioning_; }
    /// False when N exceeds kMaxMaterializedN; only moments are then available.
    bool materialized() const noexcept { return !probs_.empty(); }
    /// P(U = k) for k in {0, ..., N+1}.
    double probability(std::uint64_t k) const;
    const std::vector<double>& probabilities() const noexcept { return probs_; }
    double mean() const noexcept { return mean_; }
    /// E(1/U) over k >= 1. Needs a materialized distribution unless the
    /// conditioning is given_I or given_I_and_E, which have closed forms.
    double inverse_mean() const;

private:
    std::uint64_t n_;
    double p_;
    BearerConditioning conditioning_;
    std::vector<double> probs_;
    double mean_ = 0.0;
};

/// Binomial pmf via log-gamma; stable for n up to 1e8 and beyond.
double binomial_pmf(std::uint64_t n, std::uint64_t k, double p);

/// Posterior odds of guilt, 1/(Np); LR 1/p under either convention.
OddsResult classical_posterior(std::uint64_t n, double p);

BearerDistribution bearers_given_I(std::uint64_t n, double p);

/// Suspect found by searching until the first trait bearer: E(1/U | I).
Probability yellin_posterior(std::uint64_t n, double p);

}  // namespace island::classical
