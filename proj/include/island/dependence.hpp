#pragma once
// Posterior odds when the suspect's selection depends on who the criminal is
// (biased search, sigma_{x,y} = P(S=x | C=y, I)) or when trait indicators are
// correlated (c_{x,y} = P(Gamma_x = 1 | Gamma_y = 1)).
//
// Individuals other than the suspect are described by classes of identical
// members; a single individual is a class of count 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "island/core.hpp"

namespace island::dependence {

enum class RatioKind {
    correlation_c,  // ratio = c_{s,y}
    bias_sigma,     // ratio = sigma_{s,y} / sigma_{s,s}
};

enum class Conditioning { on_I, unconditioned };

struct DependencyGroup {
    std::uint64_t count = 1;
    double prior_given_I = 0.0;                 // P(C=y | I), per member
    std::optional<double> prior_unconditioned;  // P(C=y), per member
    double ratio = 1.0;
    std::optional<double> frequency;      // p_y
    std::optional<double> reverse_ratio;  // c_{y,s}
};

struct GroupedDependencySpec {
    RatioKind kind = RatioKind::correlation_c;
    double suspect_frequency = 0.0;  // p_s
    double suspect_prior_given_I = 0.0;
    std::optional<double> suspect_prior_unconditioned;
    std::vector<DependencyGroup> groups;

    void validate() const;
};

struct DependenceResult {
    /// lr is the base ratio 1/p_s; `correction` is the bias or correlation
    /// factor, so odds = lr * correction * prior_odds.
    OddsResult result;
    double effective_lr = 0.0;
    /// Biased search only: P(C=s | S=s, I).
    std::optional<double> guilt_given_selection;
};

DependenceResult biased_search_odds(const GroupedDependencySpec& spec);

DependenceResult correlated_odds(const GroupedDependencySpec& spec, Conditioning conditioning);

/// Correlation model with the same posterior odds as a biased search without
/// correlations: c_{s,y} = p_s * sigma_{s,y} / sigma_{s,s}. Fails with
/// no-equivalent when that exceeds 1 for some class.
GroupedDependencySpec bias_correlation_equivalent(const GroupedDependencySpec& spec);

}  // namespace island::dependence
