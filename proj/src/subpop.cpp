#include "island/subpop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace island::subpop {

namespace {

double point_p(const PopulationModel& model, std::size_t i) {
    return std::get<PointFrequency>(model[i].freq).p;
}

double weighted_frequency(const PopulationModel& model) {
    double acc = 0.0;
    for (std::size_t i = 0; i < model.count(); ++i) acc += point_p(model, i) * model[i].beta.value();
    return acc;
}

void require(const PopulationModel& model, std::size_t s) {
    model.check_index(s);
    model.require_point_frequencies();
}

}  // namespace

std::vector<Probability> alpha_from_beta(const PopulationModel& model) {
    model.require_point_frequencies();
    const double total = weighted_frequency(model);
    std::vector<Probability> alpha;
    alpha.reserve(model.count());
    for (std::size_t i = 0; i < model.count(); ++i)
        alpha.emplace_back(std::min(1.0, point_p(model, i) * model[i].beta.value() / total));
    return alpha;
}

OddsResult hetero_posterior_odds(const PopulationModel& model, std::size_t s) {
    require(model, s);
    const double p_s = point_p(model, s);
    const double n_s = static_cast<double>(model[s].size);
    const double beta_s = model[s].beta.value();
    const double alpha_s = p_s * beta_s / weighted_frequency(model);
    const double denom = n_s * weighted_frequency(model) / beta_s - p_s;
    const double odds = denom <= 0.0 ? kInfinity : 1.0 / denom;
    const double prior = n_s - alpha_s <= 0.0 ? kInfinity : alpha_s / (n_s - alpha_s);
    return make_result(odds, prior, LikelihoodRatio(1.0 / p_s, LrConvention::conditional_on_I));
}

OddsResult hetero_posterior_odds_joint(const PopulationModel& model, std::size_t s) {
    require(model, s);
    const auto lr = hetero_lr(model, s, LrConvention::joint_I_and_E);
    const double n_s = static_cast<double>(model[s].size);
    const double beta_s = model[s].beta.value();
    const double prior = n_s - beta_s <= 0.0 ? kInfinity : beta_s / (n_s - beta_s);
    return make_result(lr.value * prior, prior, lr);
}

LikelihoodRatio hetero_lr(const PopulationModel& model, std::size_t s, LrConvention convention) {
    require(model, s);
    const double p_s = point_p(model, s);
    const double n_s = static_cast<double>(model[s].size);
    const double beta_s = model[s].beta.value();
    switch (convention) {
        case LrConvention::conditional_on_I: return {1.0 / p_s, convention};
        case LrConvention::joint_I_and_E: {
            const double denom = n_s * weighted_frequency(model) - p_s * beta_s;
            return {denom <= 0.0 ? kInfinity : (n_s - beta_s) / denom, convention};
        }
        case LrConvention::large_N: return {1.0 / weighted_frequency(model), convention};
        case LrConvention::default_population: {
            if (model.count() != 2 || model[s].size != 1)
                fail(ErrorCode::convention_mismatch,
                     "default_population needs exactly two subpopulations and N_s = 1 for the suspect's");
            return {1.0 / point_p(model, 1 - s), convention};
        }
        case LrConvention::conservative: break;
    }
    fail(ErrorCode::convention_mismatch,
         std::string("convention ") + std::string(to_string(convention)) + " is not defined for point frequencies");
}

Probability hetero_posterior_marginal(const PopulationModel& model, MarginalWeights weights) {
    model.require_point_frequencies();
    const auto alpha = alpha_from_beta(model);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < model.count(); ++i) {
        const double p = point_p(model, i);
        const double n = static_cast<double>(model[i].size);
        const double a = alpha[i].value();
        const double z = a / (p * (n - a) + a);
        const double w = weights == MarginalWeights::exact ? a / n + (1.0 - a / n) * p : p;
        num += n * w * z;
        den += n * w;
    }
    return Probability(std::min(1.0, num / den));
}

double hetero_expected_bearers(const PopulationModel& model, std::size_t s) {
    require(model, s);
    const double total = static_cast<double>(model.total_size());
    double bearers = 0.0;
    for (std::size_t i = 0; i < model.count(); ++i) {
        const double n = static_cast<double>(model[i].size);
        if (std::abs(model[i].beta.value() - n / total) > 1e-12)
            fail(ErrorCode::precondition, "expected-bearer identity needs beta_i = N_i/N (subpopulation " +
                                              std::to_string(i) + " violates it)");
        bearers += n * point_p(model, i);
    }
    return bearers + 1.0 - point_p(model, s);
}

}  // namespace island::subpop
