#include "island/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "island/core.hpp"

namespace island {

const char* to_string(DensityStage stage) noexcept {
    switch (stage) {
        case DensityStage::prior_to_crime: return "prior_to_crime";
        case DensityStage::prior_to_suspect: return "prior_to_suspect";
        case DensityStage::post_match: return "post_match";
    }
    return "unknown";
}

double beta_pdf(double t, double a, double b) {
    if (t < 0.0 || t > 1.0) return 0.0;
    const double log_norm = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
    if (t == 0.0) {
        if (a < 1.0) return kInfinity;
        return a == 1.0 ? std::exp(log_norm) : 0.0;
    }
    if (t == 1.0) {
        if (b < 1.0) return kInfinity;
        return b == 1.0 ? std::exp(log_norm) : 0.0;
    }
    return std::exp(log_norm + (a - 1.0) * std::log(t) + (b - 1.0) * std::log1p(-t));
}

FrequencyDensity::FrequencyDensity(std::variant<BetaParams, TabulatedGrid> rep, DensityStage stage,
                                   std::optional<std::uint64_t> context_n)
    : rep_(std::move(rep)), stage_(stage), context_n_(context_n) {
    validate();
}

void FrequencyDensity::validate() const {
    if (stage_ == DensityStage::post_match && !context_n_)
        fail(ErrorCode::validation, "post-match density requires the population size N");
    if (const auto* beta = beta_params()) {
        if (!(beta->a > 0.0) || !(beta->b > 0.0) || !std::isfinite(beta->a) || !std::isfinite(beta->b))
            fail(ErrorCode::domain, "Beta parameters must be positive and finite");
        return;
    }
    const auto& values = grid()->values;
    check_resolution(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            fail(ErrorCode::numerical_domain, "density grid value at node " + std::to_string(i) + " is not finite");
        if (values[i] < 0.0)
            fail(ErrorCode::domain, "density grid value at node " + std::to_string(i) + " is negative");
    }
    const double mass = integrate_samples(values);
    if (std::abs(mass - 1.0) > 1e-9)
        fail(ErrorCode::numerical_domain, "density grid integrates to " + std::to_string(mass));
    const double m = moments().mean;
    if (!(m > 0.0 && m < 1.0)) fail(ErrorCode::domain, "density mean must lie in (0,1)");
}

FrequencyDensity FrequencyDensity::beta(double a, double b, DensityStage stage,
                                        std::optional<std::uint64_t> context_n) {
    return FrequencyDensity(BetaParams{a, b}, stage, context_n);
}

FrequencyDensity FrequencyDensity::beta_from_mean_sd(double mean, double sd, DensityStage stage) {
    if (!(mean > 0.0 && mean < 1.0)) fail(ErrorCode::domain, "mean frequency must lie in (0,1)");
    const double var = sd * sd;
    if (!(sd > 0.0) || !(var < mean * (1.0 - mean)))
        fail(ErrorCode::domain, "standard deviation must satisfy 0 < sd^2 < mean(1-mean)");
    const double k = mean * (1.0 - mean) / var - 1.0;
    return beta(mean * k, (1.0 - mean) * k, stage);
}

FrequencyDensity FrequencyDensity::tabulated(std::vector<double> values, DensityStage stage,
                                             std::optional<std::uint64_t> context_n) {
    check_resolution(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            fail(ErrorCode::numerical_domain, "density grid value at node " + std::to_string(i) + " is not finite");
        if (values[i] < 0.0)
            fail(ErrorCode::domain, "density grid value at node " + std::to_string(i) + " is negative");
    }
    const double mass = integrate_samples(values);
    if (!(mass > 0.0)) fail(ErrorCode::numerical_domain, "density grid cannot be normalized (zero mass)");
    for (double& v : values) v /= mass;
    return FrequencyDensity(TabulatedGrid{std::move(values)}, stage, context_n);
}

FrequencyDensity FrequencyDensity::discrete_mixture(std::span<const double> atoms, std::span<const double> weights,
                                                    int resolution, DensityStage stage) {
    if (atoms.empty() || atoms.size() != weights.size())
        fail(ErrorCode::validation, "mixture needs matching non-empty atom and weight lists");
    const auto w = simpson_weights(resolution);
    std::vector<double> values(w.size(), 0.0);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (!(atoms[j] >= 0.0 && atoms[j] <= 1.0)) fail(ErrorCode::domain, "mixture atom outside [0,1]");
        if (!(weights[j] >= 0.0)) fail(ErrorCode::domain, "mixture weight is negative");
        const auto node = static_cast<std::size_t>(std::lround(atoms[j] * (resolution - 1)));
        values[node] += weights[j] / w[node];
    }
    return tabulated(std::move(values), stage);
}

DensityMoments FrequencyDensity::moments() const {
    if (const auto* beta = beta_params()) {
        const double a = beta->a, b = beta->b, s = a + b;
        DensityMoments m;
        m.mean = a / s;
        m.variance = a * b / (s * s * (s + 1.0));
        m.third_raw = m.mean * (a + 1.0) / (s + 1.0) * (a + 2.0) / (s + 2.0);
        return m;
    }
    const auto& values = grid()->values;
    const auto t = grid_nodes(static_cast<int>(values.size()));
    std::vector<double> y(values.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = t[i] * values[i];
    DensityMoments m;
    m.mean = integrate_samples(y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (t[i] - m.mean) * (t[i] - m.mean) * values[i];
    m.variance = integrate_samples(y);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = t[i] * t[i] * t[i] * values[i];
    m.third_raw = integrate_samples(y);
    return m;
}

std::vector<double> FrequencyDensity::tabulate(int resolution) const {
    if (const auto* g = grid()) return g->values;
    const auto* beta = beta_params();
    const auto t = grid_nodes(resolution);
    std::vector<double> values(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        values[i] = beta_pdf(t[i], beta->a, beta->b);
        if (!std::isfinite(values[i]))
            fail(ErrorCode::numerical_domain, "Beta density is unbounded on [0,1] and cannot be tabulated");
    }
    return values;
}

FrequencyDensity FrequencyDensity::with_stage(DensityStage stage, std::optional<std::uint64_t> context_n) const {
    return FrequencyDensity(rep_, stage, context_n);
}

}  // namespace island
