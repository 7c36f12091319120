#include "island/population.hpp"

#include <cmath>
#include <string>

namespace island {

FrequencySummary summarize(const FrequencySpec& freq) {
    if (const auto* point = std::get_if<PointFrequency>(&freq)) return {point->p, 0.0};
    const auto m = std::get<FrequencyDensity>(freq).moments();
    return {m.mean, m.variance};
}

PopulationModel::PopulationModel(std::vector<Subpopulation> subpops) : subpops_(std::move(subpops)) {
    if (subpops_.empty()) fail(ErrorCode::validation, "population needs at least one subpopulation");
    double beta_sum = 0.0;
    std::size_t with_eps = 0;
    for (std::size_t i = 0; i < subpops_.size(); ++i) {
        const auto& sp = subpops_[i];
        const std::string where = "subpopulation " + std::to_string(i);
        if (sp.size < 1) fail(ErrorCode::validation, where + ": size must be >= 1");
        if (const auto* point = std::get_if<PointFrequency>(&sp.freq)) {
            if (std::isnan(point->p)) fail(ErrorCode::invalid_value, where + ": frequency is NaN");
            if (!(point->p > 0.0 && point->p < 1.0))
                fail(ErrorCode::validation, where + ": frequency must lie in (0,1)");
        } else {
            const auto& d = std::get<FrequencyDensity>(sp.freq);
            if (d.stage() != DensityStage::prior_to_crime)
                fail(ErrorCode::stage, where + ": frequency density must be a prior-to-crime density");
        }
        if (!(sp.beta.value() > 0.0)) fail(ErrorCode::validation, where + ": beta must be positive");
        beta_sum += sp.beta.value();
        if (sp.epsilon) ++with_eps;
    }
    if (std::abs(beta_sum - 1.0) > kPriorSumTolerance)
        fail(ErrorCode::validation, "beta priors sum to " + std::to_string(beta_sum) + ", expected 1");
    if (with_eps != 0 && with_eps != subpops_.size())
        fail(ErrorCode::validation, "epsilon must be given for every subpopulation or for none");
    if (with_eps != 0) require_epsilon();
}

PopulationModel PopulationModel::homogeneous(std::uint64_t size, FrequencySpec freq) {
    return PopulationModel({Subpopulation{size, std::move(freq), Probability(1.0), Probability(1.0)}});
}

std::uint64_t PopulationModel::total_size() const noexcept {
    std::uint64_t n = 0;
    for (const auto& sp : subpops_) n += sp.size;
    return n;
}

bool PopulationModel::has_epsilon() const noexcept { return subpops_.front().epsilon.has_value(); }

void PopulationModel::require_epsilon() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < subpops_.size(); ++i) {
        if (!subpops_[i].epsilon)
            fail(ErrorCode::validation, "subpopulation " + std::to_string(i) + ": epsilon prior is required");
        sum += subpops_[i].epsilon->value();
    }
    if (std::abs(sum - 1.0) > kPriorSumTolerance)
        fail(ErrorCode::validation, "epsilon priors sum to " + std::to_string(sum) + ", expected 1");
}

void PopulationModel::require_point_frequencies() const {
    for (std::size_t i = 0; i < subpops_.size(); ++i)
        if (!std::holds_alternative<PointFrequency>(subpops_[i].freq))
            fail(ErrorCode::precondition,
                 "subpopulation " + std::to_string(i) + ": operation requires a point frequency");
}

void PopulationModel::check_index(std::size_t s) const {
    if (s >= subpops_.size())
        fail(ErrorCode::index, "subpopulation index " + std::to_string(s) + " out of range");
}

PopulationModel PopulationModel::swapped_priors() const {
    require_epsilon();
    auto copy = subpops_;
    for (auto& sp : copy) {
        const Probability eps = *sp.epsilon;
        sp.epsilon = sp.beta;
        sp.beta = eps;
    }
    return PopulationModel(std::move(copy));
}

}  // namespace island
