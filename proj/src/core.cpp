#include "island/core.hpp"

#include <array>
#include <utility>

namespace island {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_value: return "invalid-value";
        case ErrorCode::domain: return "domain";
        case ErrorCode::numerical_domain: return "numerical-domain";
        case ErrorCode::stage: return "stage";
        case ErrorCode::convention_mismatch: return "convention-mismatch";
        case ErrorCode::no_equivalent: return "no-equivalent";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::index: return "index";
        case ErrorCode::conditioning_impossible: return "conditioning-impossible";
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::infeasible_conditioning: return "infeasible-conditioning";
        case ErrorCode::validation: return "validation";
    }
    return "unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

Probability::Probability(double value) : value_(value) {
    if (std::isnan(value)) fail(ErrorCode::invalid_value, "probability is NaN");
    if (value < 0.0 || value > 1.0)
        fail(ErrorCode::domain, "probability " + std::to_string(value) + " outside [0,1]");
}

Odds::Odds(double value) : value_(value) {
    if (std::isnan(value)) fail(ErrorCode::invalid_value, "odds are NaN");
    if (value < 0.0) fail(ErrorCode::domain, "odds " + std::to_string(value) + " are negative");
}

LikelihoodRatio::LikelihoodRatio(double v, LrConvention c) : value(v), convention(c) {
    if (std::isnan(v)) fail(ErrorCode::invalid_value, "likelihood ratio is NaN");
    if (v < 0.0) fail(ErrorCode::domain, "likelihood ratio is negative");
}

namespace {

constexpr std::array<std::pair<LrConvention, std::string_view>, 5> kConventionNames{{
    {LrConvention::conditional_on_I, "conditional_on_I"},
    {LrConvention::joint_I_and_E, "joint_I_and_E"},
    {LrConvention::large_N, "large_N"},
    {LrConvention::default_population, "default_population"},
    {LrConvention::conservative, "conservative"},
}};

}  // namespace

std::string_view to_string(LrConvention convention) noexcept {
    for (const auto& [c, name] : kConventionNames)
        if (c == convention) return name;
    return "unknown";
}

std::string_view assumption_note(LrConvention convention) noexcept {
    switch (convention) {
        case LrConvention::conditional_on_I:
            return "treats the criminal's trait as background; needs only the suspect's own frequency";
        case LrConvention::joint_I_and_E:
            return "treats both matches as evidence; requires the beta priors and the suspect's subpopulation size";
        case LrConvention::large_N:
            return "approximation valid when the suspect's prior probability of guilt is small; requires beta priors";
        case LrConvention::default_population:
            return "only two hypotheses: suspect is the criminal, or the criminal is from the default population";
        case LrConvention::conservative:
            return "prior fixed at its extreme value; never exceeds the conditional ratio";
    }
    return "";
}

LrConvention lr_convention_from_string(std::string_view name) {
    for (const auto& [c, n] : kConventionNames)
        if (n == name) return c;
    fail(ErrorCode::validation, "unknown likelihood-ratio convention '" + std::string(name) + "'");
}

Probability probability_from_odds(Odds o) noexcept {
    if (o.is_infinite()) return Probability(1.0);
    return Probability(o.value() / (1.0 + o.value()));
}

Odds odds_from_probability(Probability p) noexcept {
    if (p.value() == 1.0) return Odds(kInfinity);
    return Odds(p.value() / (1.0 - p.value()));
}

OddsResult make_result(double odds, double prior_odds, LikelihoodRatio lr, double correction) {
    OddsResult r;
    r.odds = Odds(odds);
    r.probability = probability_from_odds(r.odds);
    r.prior_odds = Odds(prior_odds);
    r.lr = lr;
    r.correction = correction;
    r.degenerate = odds == 0.0 || std::isinf(odds);
    return r;
}

}  // namespace island
