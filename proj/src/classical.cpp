#include "island/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace island::classical {

namespace {

void check_frequency(double p) {
    if (std::isnan(p)) fail(ErrorCode::invalid_value, "trait frequency is NaN");
    if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::domain, "trait frequency must lie in (0,1)");
}

}  // namespace

double binomial_pmf(std::uint64_t n, std::uint64_t k, double p) {
    if (k > n) return 0.0;
    const double dn = static_cast<double>(n), dk = static_cast<double>(k);
    const double log_choose = std::lgamma(dn + 1.0) - std::lgamma(dk + 1.0) - std::lgamma(dn - dk + 1.0);
    const double log_p = k == 0 ? 0.0 : dk * std::log(p);
    const double log_q = k == n ? 0.0 : (dn - dk) * std::log1p(-p);
    return std::exp(log_choose + log_p + log_q);
}

BearerDistribution::BearerDistribution(std::uint64_t n, double p, BearerConditioning conditioning)
    : n_(n), p_(p), conditioning_(conditioning) {
    check_frequency(p);
    const double np = static_cast<double>(n) * p;
    switch (conditioning) {
        case BearerConditioning::unconditioned: mean_ = (static_cast<double>(n) + 1.0) * p; break;
        case BearerConditioning::given_I: mean_ = 1.0 + np; break;
        case BearerConditioning::given_I_and_E: {
            // E(U^2 | I) / E(U | I) for U | I ~ 1 + Bin(N, p).
            const double second = 1.0 + 3.0 * np + np * np - np * p;
            mean_ = second / (1.0 + np);
            break;
        }
    }
    if (n > kMaxMaterializedN) return;

    probs_.assign(n + 2, 0.0);
    for (std::uint64_t k = 0; k <= n + 1; ++k) {
        switch (conditioning) {
            case BearerConditioning::unconditioned: probs_[k] = binomial_pmf(n + 1, k, p); break;
            case BearerConditioning::given_I: probs_[k] = k == 0 ? 0.0 : binomial_pmf(n, k - 1, p); break;
            case BearerConditioning::given_I_and_E:
                probs_[k] = k == 0 ? 0.0 : static_cast<double>(k) * binomial_pmf(n, k - 1, p) / (1.0 + np);
                break;
        }
    }
}

double BearerDistribution::probability(std::uint64_t k) const {
    if (!materialized())
        fail(ErrorCode::capacity, "bearer distribution for N=" + std::to_string(n_) + " is not materialized");
    return k < probs_.size() ? probs_[k] : 0.0;
}

double BearerDistribution::inverse_mean() const {
    if (materialized()) {
        double acc = 0.0;
        for (std::size_t k = 1; k < probs_.size(); ++k) acc += probs_[k] / static_cast<double>(k);
        return acc;
    }
    const double n1 = static_cast<double>(n_) + 1.0;
    switch (conditioning_) {
        case BearerConditioning::given_I:
            // E[1/(1+X)], X ~ Bin(N,p), equals (1 - (1-p)^(N+1)) / ((N+1)p).
            return -std::expm1(n1 * std::log1p(-p_)) / (n1 * p_);
        case BearerConditioning::given_I_and_E: return 1.0 / (1.0 + static_cast<double>(n_) * p_);
        case BearerConditioning::unconditioned: break;
    }
    fail(ErrorCode::capacity, "E(1/U) of the unconditioned distribution needs a materialized distribution");
}

OddsResult classical_posterior(std::uint64_t n, double p) {
    check_frequency(p);
    const LikelihoodRatio lr(1.0 / p, LrConvention::conditional_on_I);
    if (n == 0) return make_result(kInfinity, kInfinity, lr);
    const double dn = static_cast<double>(n);
    return make_result(1.0 / (dn * p), 1.0 / dn, lr);
}

BearerDistribution bearers_given_I(std::uint64_t n, double p) {
    return BearerDistribution(n, p, BearerConditioning::given_I);
}

Probability yellin_posterior(std::uint64_t n, double p) {
    return Probability(std::min(1.0, bearers_given_I(n, p).inverse_mean()));
}

}  // namespace island::classical
