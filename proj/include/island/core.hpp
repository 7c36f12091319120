#pragma once
// Value types shared by every evidence model: probabilities, odds, likelihood
// ratios with their conditioning convention, and the error taxonomy.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace island {

enum class ErrorCode : int {
    invalid_value = 1,
    domain,
    numerical_domain,
    stage,
    convention_mismatch,
    no_equivalent,
    precondition,
    index,
    conditioning_impossible,
    capacity,
    infeasible_conditioning,
    validation,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A probability in [0,1]. Construction rejects NaN and out-of-range values.
class Probability {
public:
    constexpr Probability() = default;
    explicit Probability(double value);

    constexpr double value() const noexcept { return value_; }
    constexpr double complement() const noexcept { return 1.0 - value_; }

    friend constexpr bool operator==(Probability, Probability) = default;

private:
    double value_ = 0.0;
};

/// Odds in [0, +inf]. Infinite odds mean certainty and are a legitimate value.
class Odds {
public:
    constexpr Odds() = default;
    explicit Odds(double value);

    constexpr double value() const noexcept { return value_; }
    bool is_infinite() const noexcept { return std::isinf(value_); }

    friend constexpr bool operator==(Odds, Odds) = default;

private:
    double value_ = 0.0;
};

/// Which events are treated as evidence when the ratio is formed.
enum class LrConvention {
    conditional_on_I,    // P(E|G,I) / P(E|G^c,I): I is background
    joint_I_and_E,       // P(I,E|G) / P(I,E|G^c): I and E are evidence
    large_N,             // large-population approximation of one of the above
    default_population,  // suspect versus a single default population
    conservative,        // lower bound obtained by fixing the prior at its extreme
};

std::string_view to_string(LrConvention convention) noexcept;
/// One-line statement of what a reported ratio presumes.
std::string_view assumption_note(LrConvention convention) noexcept;
LrConvention lr_convention_from_string(std::string_view name);

struct LikelihoodRatio {
    double value = 1.0;
    LrConvention convention = LrConvention::conditional_on_I;

    LikelihoodRatio() = default;
    LikelihoodRatio(double v, LrConvention c);
};

/// Posterior odds together with the prior-odds / likelihood-ratio split that
/// produced them. `prior_odds * lr * correction == odds` up to rounding.
struct OddsResult {
    Odds odds;
    Probability probability;
    Odds prior_odds;
    LikelihoodRatio lr;
    double correction = 1.0;
    bool degenerate = false;  // set when odds are 0 or +inf for structural reasons
};

Probability probability_from_odds(Odds o) noexcept;
Odds odds_from_probability(Probability p) noexcept;

/// Builds an OddsResult from its parts, deriving the posterior probability.
OddsResult make_result(double odds, double prior_odds, LikelihoodRatio lr, double correction = 1.0);

// Tolerances used when validating normalized prior vectors.
inline constexpr double kPriorSumTolerance = 1e-12;

}  // namespace island
