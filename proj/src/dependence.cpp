#include "island/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace island::dependence {

namespace {

constexpr double kNormalizationTolerance = 1e-10;
constexpr double kSymmetryTolerance = 1e-9;

std::string group_name(std::size_t i) { return "group " + std::to_string(i); }

void check_unit_open(double v, const std::string& what) {
    if (std::isnan(v)) fail(ErrorCode::invalid_value, what + " is NaN");
    if (!(v > 0.0 && v < 1.0)) fail(ErrorCode::domain, what + " must lie in (0,1)");
}

void check_probability(double v, const std::string& what) {
    if (std::isnan(v)) fail(ErrorCode::invalid_value, what + " is NaN");
    if (!(v >= 0.0 && v <= 1.0)) fail(ErrorCode::domain, what + " must lie in [0,1]");
}

// c_{y,s} for a group, from the explicit value or Bayes symmetry.
double reverse_correlation(const GroupedDependencySpec& spec, std::size_t i) {
    const auto& g = spec.groups[i];
    if (g.reverse_ratio) return *g.reverse_ratio;
    if (g.frequency) return g.ratio * *g.frequency / spec.suspect_frequency;
    fail(ErrorCode::validation,
         group_name(i) + ": unconditioned mode needs reverse_ratio c_{y,s} or the class frequency p_y");
}

DependenceResult assemble(double base_lr, double numerator_prior, double rest_prior, double weighted_sum,
                          LrConvention convention) {
    DependenceResult out;
    double odds, correction;
    if (weighted_sum == 0.0) {
        odds = kInfinity;
        correction = kInfinity;
    } else {
        correction = rest_prior / (base_lr * weighted_sum);
        odds = numerator_prior / weighted_sum;
    }
    const double prior_odds = rest_prior == 0.0 ? kInfinity : numerator_prior / rest_prior;
    out.result = make_result(odds, prior_odds, LikelihoodRatio(base_lr, convention), correction);
    out.effective_lr = base_lr * correction;
    return out;
}

}  // namespace

void GroupedDependencySpec::validate() const {
    check_unit_open(suspect_frequency, "suspect frequency p_s");
    check_probability(suspect_prior_given_I, "suspect prior P(C=s|I)");
    if (groups.empty()) fail(ErrorCode::validation, "at least one non-suspect group is required");
    double total = suspect_prior_given_I;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& g = groups[i];
        const auto name = group_name(i);
        if (g.count < 1) fail(ErrorCode::validation, name + ": count must be >= 1");
        check_probability(g.prior_given_I, name + " prior P(C=y|I)");
        if (std::isnan(g.ratio)) fail(ErrorCode::invalid_value, name + ": ratio is NaN");
        if (g.ratio < 0.0) fail(ErrorCode::domain, name + ": ratio must be non-negative");
        if (kind == RatioKind::correlation_c && g.ratio > 1.0)
            fail(ErrorCode::domain, name + ": correlation c_{s,y} must lie in [0,1]");
        if (g.frequency) check_unit_open(*g.frequency, name + " frequency p_y");
        if (g.reverse_ratio) check_probability(*g.reverse_ratio, name + " reverse correlation c_{y,s}");
        if (g.prior_unconditioned) check_probability(*g.prior_unconditioned, name + " prior P(C=y)");
        if (kind == RatioKind::correlation_c && g.reverse_ratio && g.frequency) {
            const double lhs = g.ratio / suspect_frequency;
            const double rhs = *g.reverse_ratio / *g.frequency;
            if (std::abs(lhs - rhs) > kSymmetryTolerance * std::max(std::abs(lhs), std::abs(rhs)))
                fail(ErrorCode::validation,
                     name + ": c_{s,y}/p_s and c_{y,s}/p_y disagree (Bayes symmetry violated)");
        }
        total += static_cast<double>(g.count) * g.prior_given_I;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance)
        fail(ErrorCode::domain, "priors given I sum to " + std::to_string(total) + ", expected 1");
}

DependenceResult biased_search_odds(const GroupedDependencySpec& spec) {
    if (spec.kind != RatioKind::bias_sigma)
        fail(ErrorCode::validation, "biased_search_odds needs sigma ratios (bias_sigma)");
    spec.validate();
    double rest = 0.0, weighted = 0.0;
    for (const auto& g : spec.groups) {
        const double mass = static_cast<double>(g.count) * g.prior_given_I;
        rest += mass;
        weighted += g.ratio * mass;
    }
    const double base = 1.0 / spec.suspect_frequency;
    auto out = assemble(base, spec.suspect_prior_given_I, rest, weighted * spec.suspect_frequency,
                        LrConvention::conditional_on_I);
    out.guilt_given_selection = spec.suspect_prior_given_I / (spec.suspect_prior_given_I + weighted);
    return out;
}

DependenceResult correlated_odds(const GroupedDependencySpec& spec, Conditioning conditioning) {
    if (spec.kind != RatioKind::correlation_c)
        fail(ErrorCode::validation, "correlated_odds needs correlation ratios (correlation_c)");
    spec.validate();
    const double base = 1.0 / spec.suspect_frequency;
    if (conditioning == Conditioning::on_I) {
        double rest = 0.0, weighted = 0.0;
        for (const auto& g : spec.groups) {
            const double mass = static_cast<double>(g.count) * g.prior_given_I;
            rest += mass;
            weighted += g.ratio * mass;
        }
        return assemble(base, spec.suspect_prior_given_I, rest, weighted, LrConvention::conditional_on_I);
    }
    if (!spec.suspect_prior_unconditioned)
        fail(ErrorCode::validation, "unconditioned mode needs the suspect's prior P(C=s)");
    check_probability(*spec.suspect_prior_unconditioned, "suspect prior P(C=s)");
    double total = *spec.suspect_prior_unconditioned, rest = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i < spec.groups.size(); ++i) {
        const auto& g = spec.groups[i];
        if (!g.prior_unconditioned)
            fail(ErrorCode::validation, group_name(i) + ": unconditioned mode needs prior P(C=y)");
        const double mass = static_cast<double>(g.count) * *g.prior_unconditioned;
        total += mass;
        rest += mass;
        weighted += reverse_correlation(spec, i) * mass;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance)
        fail(ErrorCode::domain, "unconditioned priors sum to " + std::to_string(total) + ", expected 1");
    return assemble(base, *spec.suspect_prior_unconditioned, rest, weighted, LrConvention::joint_I_and_E);
}

GroupedDependencySpec bias_correlation_equivalent(const GroupedDependencySpec& spec) {
    if (spec.kind != RatioKind::bias_sigma)
        fail(ErrorCode::validation, "conversion needs a biased-search specification");
    spec.validate();
    GroupedDependencySpec out = spec;
    out.kind = RatioKind::correlation_c;
    for (std::size_t i = 0; i < out.groups.size(); ++i) {
        auto& g = out.groups[i];
        const double c = spec.suspect_frequency * g.ratio;
        if (c > 1.0)
            fail(ErrorCode::no_equivalent,
                 group_name(i) + ": p_s * sigma ratio = " + std::to_string(c) + " exceeds 1");
        g.ratio = c;
        if (g.frequency) g.reverse_ratio = c * *g.frequency / spec.suspect_frequency;
    }
    return out;
}

}  // namespace island::dependence
