#pragma once
// Database searches: posterior odds that the criminal is in the database or is
// a given matching member, the long-run effectiveness of a unique match, and
// how that effectiveness changes as the database grows.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "island/core.hpp"

namespace island::database {

struct DatabaseSpec {
    std::uint64_t n = 0;  // database size
    std::uint64_t k = 0;  // matches; members 0..k-1 are the matched ones
    /// P(C = x_i | I) per member. Empty means `uniform_total` spread evenly.
    std::vector<double> member_alphas;
    std::optional<double> uniform_total;
    double outside_total = 0.0;  // P(C not in D | I)
    double p = 0.0;

    void validate() const;
    double alpha(std::uint64_t i) const;
    double matched_total() const;
    double database_total() const;
};

/// Reorders members so that matched ones come first. `order[j]` is the input
/// index of the member placed at position j.
struct Canonicalized {
    DatabaseSpec spec;
    std::vector<std::size_t> order;
};
Canonicalized canonicalize(const std::vector<double>& alphas, const std::vector<bool>& matched,
                           double outside_total, double p);

/// Odds of C in D given the match pattern; LR (sum matched)/(p sum D).
OddsResult database_focused(const DatabaseSpec& spec);

/// Odds of C = x_target. Prior odds are taken against the individuals the
/// search did not exclude, so that the ratio is 1/p for a single match.
OddsResult individual_focused(const DatabaseSpec& spec, std::uint64_t target);

struct Effectiveness {
    OddsResult odds;          // odds that a unique match is with C; LR 1/(np)
    Probability p_unique;     // P(E_1), display form q(1-p)^n + (1-q)np(1-p)^(n-1)
    Probability p_unique_exact;  // P(E_1) with (1-p)^(n-1) on both terms
};

/// Database of n members with homogeneous p and q = P(C in D | I).
Effectiveness database_effectiveness(std::uint64_t n, double p, double q);

/// P(K = k | I) for k = 0..kmax, K the number of matches in the database.
std::vector<double> match_count_distribution(std::uint64_t n, double p, double q, std::uint64_t kmax);

/// P(both matches coincidental | K = 2, I).
double double_match_coincidence(std::uint64_t n, double p, double q);

enum class InclusionKind { random_sample, sqrt_weighted, custom };

struct GrowthModel {
    std::uint64_t population = 0;  // N
    double p = 0.0;
    InclusionKind kind = InclusionKind::random_sample;
    /// Custom q_n, evaluated at the requested sizes.
    std::function<double(std::uint64_t)> custom;

    double inclusion(std::uint64_t n) const;
};

struct GrowthPoint {
    std::uint64_t n = 0;
    double odds = 0.0;
    double p_unique = 0.0;
};

std::vector<GrowthPoint> growth_curve(const GrowthModel& model, const std::vector<std::uint64_t>& sizes);

/// Columns n,odds,p_unique with a header row; full precision.
void write_growth_csv(std::ostream& out, const std::vector<GrowthPoint>& curve);

/// Whether doubling the database raises the odds that a unique match is with C.
bool enlargement_threshold(double q_n, double q_2n);

/// (1-p)^n without cancellation.
double survival_power(double p, double n);

}  // namespace island::database
