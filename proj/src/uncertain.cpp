#include "island/uncertain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "island/classical.hpp"
#include "island/quadrature.hpp"

namespace island::uncertain {

namespace {

void require_stage(const FrequencyDensity& d, DensityStage expected) {
    if (d.stage() != expected)
        fail(ErrorCode::stage, std::string("density is ") + to_string(d.stage()) + ", expected " +
                                   to_string(expected));
}

// Per-subpopulation p and sigma^2, with the density's stage checked.
FrequencySummary summary_of(const FrequencySpec& freq) {
    if (const auto* d = std::get_if<FrequencyDensity>(&freq)) require_stage(*d, DensityStage::prior_to_crime);
    const auto s = summarize(freq);
    if (!(s.p > 0.0)) fail(ErrorCode::domain, "mean frequency is zero");
    return s;
}

double weighted_mean_frequency(const PopulationModel& model) {
    double acc = 0.0;
    for (const auto& sp : model.subpops()) acc += summary_of(sp.freq).p * sp.beta.value();
    return acc;
}

// 1/P(G | I, E, S in X_s) - 1.
double posterior_excess(const PopulationModel& model, std::size_t s) {
    const auto f = summary_of(model[s].freq);
    const double n_s = static_cast<double>(model[s].size);
    return n_s * weighted_mean_frequency(model) / model[s].beta.value() + (n_s - 1.0) * f.variance / f.p - f.p;
}

// p_i eps_i / (N_i P_i) up to the common factor (sum p beta) / beta_i, so
// that the weights stay finite when P_i is tiny.
std::vector<double> membership_weights(const PopulationModel& model) {
    model.require_epsilon();
    const double pb = weighted_mean_frequency(model);
    std::vector<double> w(model.count());
    for (std::size_t i = 0; i < model.count(); ++i) {
        const auto f = summary_of(model[i].freq);
        const double n = static_cast<double>(model[i].size);
        const double beta = model[i].beta.value();
        w[i] = f.p * model[i].epsilon->value() * (pb + beta / n * (1.0 - f.p + (n - 1.0) * f.variance / f.p));
    }
    return w;
}

std::vector<double> grid_of(const FrequencyDensity& d, int resolution) { return d.tabulate(resolution); }

}  // namespace

FrequencyDensity transform_density(const FrequencyDensity& d, Direction direction, std::optional<std::uint64_t> n,
                                   int resolution) {
    check_resolution(resolution);
    switch (direction) {
        case Direction::crime_to_suspect: {
            require_stage(d, DensityStage::prior_to_crime);
            if (const auto* b = d.beta_params())
                return FrequencyDensity::beta(b->a + 1.0, b->b, DensityStage::prior_to_suspect);
            auto v = grid_of(d, resolution);
            const auto t = grid_nodes(static_cast<int>(v.size()));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= t[i];
            return FrequencyDensity::tabulated(std::move(v), DensityStage::prior_to_suspect);
        }
        case Direction::suspect_to_match: {
            require_stage(d, DensityStage::prior_to_suspect);
            if (!n) fail(ErrorCode::validation, "post-match density requires the population size N");
            auto v = grid_of(d, resolution);
            const auto t = grid_nodes(static_cast<int>(v.size()));
            const double dn = static_cast<double>(*n);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= 1.0 + dn * t[i];
            return FrequencyDensity::tabulated(std::move(v), DensityStage::post_match, n);
        }
        case Direction::match_to_suspect: {
            require_stage(d, DensityStage::post_match);
            if (n && *n != *d.context_n())
                fail(ErrorCode::validation, "N = " + std::to_string(*n) + " conflicts with the density's N = " +
                                                std::to_string(*d.context_n()));
            auto v = grid_of(d, resolution);
            const auto t = grid_nodes(static_cast<int>(v.size()));
            const double dn = static_cast<double>(*d.context_n());
            for (std::size_t i = 0; i < v.size(); ++i) v[i] /= 1.0 + dn * t[i];
            return FrequencyDensity::tabulated(std::move(v), DensityStage::prior_to_suspect);
        }
        case Direction::suspect_to_crime: {
            require_stage(d, DensityStage::prior_to_suspect);
            auto v = grid_of(d, resolution);
            if (v.size() < 5) fail(ErrorCode::validation, "backward transform needs at least 5 nodes");
            const auto t = grid_nodes(static_cast<int>(v.size()));
            for (std::size_t i = 1; i < v.size(); ++i) v[i] /= t[i];
            // chi_I vanishes at 0, so chi(0) is extrapolated from the next nodes
            // (quintic when the grid allows it, else cubic).
            const double v0 = v.size() >= 7
                                  ? 6.0 * v[1] - 15.0 * v[2] + 20.0 * v[3] - 15.0 * v[4] + 6.0 * v[5] - v[6]
                                  : 3.0 * v[1] - 3.0 * v[2] + v[3];
            v[0] = std::max(0.0, v0);
            return FrequencyDensity::tabulated(std::move(v), DensityStage::prior_to_crime);
        }
    }
    fail(ErrorCode::validation, "unknown transform direction");
}

FrequencyMoments frequency_moments(const FrequencySpec& freq, std::optional<std::uint64_t> n) {
    FrequencyMoments m;
    if (const auto* point = std::get_if<PointFrequency>(&freq)) {
        if (!(point->p > 0.0 && point->p < 1.0)) fail(ErrorCode::domain, "frequency must lie in (0,1)");
        m.p = m.p_prime = point->p;
        if (n) m.p_double_prime = point->p;
        return m;
    }
    const auto& d = std::get<FrequencyDensity>(freq);
    require_stage(d, DensityStage::prior_to_crime);
    const auto raw = d.moments();
    if (!(raw.mean > 0.0)) fail(ErrorCode::domain, "mean frequency is zero");
    m.p = raw.mean;
    m.sigma2 = raw.variance;
    m.p_prime = m.p + m.sigma2 / m.p;
    if (n) {
        const double dn = static_cast<double>(*n);
        // E(W^2 | I) = E(W^3)/p.
        m.p_double_prime = (m.p_prime + dn * raw.third_raw / m.p) / (1.0 + dn * m.p_prime);
    }
    return m;
}

OddsResult uncertain_posterior(std::uint64_t n, const FrequencySpec& freq) {
    const auto m = frequency_moments(freq);
    const LikelihoodRatio lr(1.0 / m.p_prime, LrConvention::conditional_on_I);
    if (n == 0) return make_result(kInfinity, kInfinity, lr);
    const double dn = static_cast<double>(n);
    return make_result(1.0 / (dn * m.p_prime), 1.0 / dn, lr);
}

Probability uncertain_subpop_posterior(const PopulationModel& model, std::size_t s, bool large_n) {
    model.check_index(s);
    if (large_n) {
        const auto f = summary_of(model[s].freq);
        const double n_s = static_cast<double>(model[s].size);
        const double x = n_s * (weighted_mean_frequency(model) / model[s].beta.value() + f.variance / f.p);
        return Probability(std::min(1.0, 1.0 / x));
    }
    const double excess = posterior_excess(model, s);
    return Probability(excess <= 0.0 ? 1.0 : 1.0 / (1.0 + excess));
}

LikelihoodRatio uncertain_subpop_lr(const PopulationModel& model, std::size_t s, LrConvention convention,
                                    LargeNBase base) {
    model.check_index(s);
    const auto f = summary_of(model[s].freq);
    const double p = f.p, var = f.variance, p1 = p + var / p;
    const double n_s = static_cast<double>(model[s].size);
    const double beta_s = model[s].beta.value();
    const double pb = weighted_mean_frequency(model);
    const double alpha_s = p * beta_s / pb;
    auto ratio = [](double num, double den) { return den <= 0.0 ? kInfinity : num / den; };
    switch (convention) {
        case LrConvention::conditional_on_I:
            return {ratio(n_s - alpha_s, n_s * alpha_s * (p1 - p) + n_s * p - p1 * alpha_s), convention};
        case LrConvention::joint_I_and_E:
            return {ratio(n_s - beta_s, n_s * pb + n_s * beta_s * (p1 - p) - beta_s * p1), convention};
        case LrConvention::large_N:
            if (base == LargeNBase::joint) return {1.0 / (pb + beta_s * var / p), convention};
            return {p / (p * p + alpha_s * var), convention};
        case LrConvention::conservative: return {p / (p * p + var), convention};
        case LrConvention::default_population: break;
    }
    fail(ErrorCode::convention_mismatch, "default_population is not defined for uncertain frequencies");
}

std::vector<Probability> suspect_subpop_posterior(const PopulationModel& model) {
    const auto w = membership_weights(model);
    double total = 0.0;
    for (double x : w) total += x;
    std::vector<Probability> out;
    out.reserve(w.size());
    for (double x : w) out.emplace_back(x / total);
    return out;
}

Probability unknown_subpop_posterior(const PopulationModel& model) {
    const auto w = membership_weights(model);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < model.count(); ++i) {
        const auto f = summary_of(model[i].freq);
        num += f.p * model[i].epsilon->value() * model[i].beta.value() / static_cast<double>(model[i].size);
        den += w[i];
    }
    return Probability(std::min(1.0, num / den));
}

Probability naive_homogeneous_posterior(const PopulationModel& model) {
    const auto m = frequency_moments(model[0].freq);
    const double n = static_cast<double>(model.total_size()) - 1.0;
    return Probability(1.0 / (1.0 + n * m.p_prime));
}

double expected_bearers_given_I(std::uint64_t n, const FrequencyDensity& prior, int resolution) {
    if (const auto* b = prior.beta_params()) {
        require_stage(prior, DensityStage::prior_to_crime);
        return 1.0 + static_cast<double>(n) * (b->a + 1.0) / (b->a + b->b + 1.0);
    }
    const auto chi_i = transform_density(prior, Direction::crime_to_suspect, std::nullopt, resolution);
    auto v = chi_i.tabulate(resolution);
    const auto t = grid_nodes(static_cast<int>(v.size()));
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= 1.0 + dn * t[i];
    return integrate_samples(v);
}

double expected_inverse_bearers_given_I_E(std::uint64_t n, const FrequencyDensity& prior, int resolution) {
    if (n > 2000) fail(ErrorCode::capacity, "explicit bearer sum is limited to N <= 2000");
    if (const auto* b = prior.beta_params()) {
        require_stage(prior, DensityStage::prior_to_crime);
        // U - 1 given I is beta-binomial(N, a+1, b).
        const double a1 = b->a + 1.0, bb = b->b, dn = static_cast<double>(n);
        const double base = std::lgamma(dn + 1.0) - (std::lgamma(a1) + std::lgamma(bb) - std::lgamma(a1 + bb)) -
                            std::lgamma(dn + a1 + bb);
        double mass = 0.0, weighted = 0.0;
        for (std::uint64_t j = 0; j <= n; ++j) {
            const double dj = static_cast<double>(j);
            const double pj = std::exp(base - std::lgamma(dj + 1.0) - std::lgamma(dn - dj + 1.0) +
                                       std::lgamma(dj + a1) + std::lgamma(dn - dj + bb));
            mass += pj;
            weighted += (dj + 1.0) * pj;
        }
        return mass / weighted;
    }
    const auto chi_i = transform_density(prior, Direction::crime_to_suspect, std::nullopt, resolution);
    const auto v = chi_i.tabulate(resolution);
    const auto t = grid_nodes(static_cast<int>(v.size()));
    // P(U=k, W=t | I, E) is proportional to chi_I(t) P(U=k | I, W=t) k.
    std::vector<double> num(v.size()), den(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double a = 0.0, b = 0.0;
        if (v[i] > 0.0) {
            for (std::uint64_t k = 1; k <= n + 1; ++k) {
                const double pk = classical::binomial_pmf(n, k - 1, t[i]);
                a += pk;
                b += static_cast<double>(k) * pk;
            }
        }
        num[i] = v[i] * a;
        den[i] = v[i] * b;
    }
    return integrate_samples(num) / integrate_samples(den);
}

}  // namespace island::uncertain
