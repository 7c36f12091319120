#include <cmath>

#include "island/classical.hpp"
#include "support.hpp"

using namespace island;
using namespace island::classical;

TEST_SUITE("classical") {

TEST_CASE("posterior") {
    CHECK(classical_posterior(10'000'000, 1e-8).probability.value() == doctest::Approx(0.909).epsilon(5e-4));
    CHECK(classical_posterior(3, 0.5).probability.value() == doctest::Approx(0.4));
    const auto lone = classical_posterior(0, 0.3);
    CHECK(lone.probability.value() == 1.0);
    CHECK(lone.odds.is_infinite());
    const auto r = classical_posterior(100, 0.01);
    CHECK(r.lr.value == doctest::Approx(100));
    CHECK(r.lr.convention == LrConvention::conditional_on_I);
    CHECK_ERROR(classical_posterior(3, 0.0), domain);
    CHECK_ERROR(classical_posterior(3, 1.0), domain);
}

TEST_CASE("posterior decreases in N and p") {
    for (std::uint64_t n = 1; n < 50; ++n)
        for (double p = 0.05; p < 0.9; p += 0.1) {
            const double here = classical_posterior(n, p).probability.value();
            CHECK(classical_posterior(n + 1, p).probability.value() < here);
            CHECK(classical_posterior(n, p + 0.05).probability.value() < here);
        }
}

TEST_CASE("bearers given I") {
    const auto b = bearers_given_I(2, 0.5);
    CHECK(b.probability(0) == 0.0);
    CHECK(b.probability(1) == doctest::Approx(0.25));
    CHECK(b.probability(2) == doctest::Approx(0.5));
    CHECK(b.probability(3) == doctest::Approx(0.25));
    CHECK(b.mean() == doctest::Approx(2.0));
    CHECK(bearers_given_I(2, 1 - 1e-12).probability(3) == doctest::Approx(1.0));
    const auto big = bearers_given_I(10'000'000, 1e-8);
    CHECK(big.mean() == doctest::Approx(1.1));
    CHECK(!big.materialized());
    double sum = 0.0;
    for (double x : bearers_given_I(500, 0.3).probabilities()) sum += x;
    CHECK(std::fabs(sum - 1.0) <= 1e-12);
}

TEST_CASE("identity chain") {
    for (std::uint64_t n : {1, 4, 30, 999})
        for (double p : {0.01, 0.3, 0.77}) {
            const double post = classical_posterior(n, p).probability.value();
            const double inv_mean = 1.0 / bearers_given_I(n, p).mean();
            const double mean_inv = BearerDistribution(n, p, BearerConditioning::given_I_and_E).inverse_mean();
            CHECK(std::fabs(post - inv_mean) <= 1e-12);
            CHECK(std::fabs(post - mean_inv) <= 1e-12);
        }
}

TEST_CASE("binomial pmf") {
    CHECK(binomial_pmf(4, 2, 0.5) == doctest::Approx(0.375));
    CHECK(binomial_pmf(100'000'000, 1, 1e-8) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
    CHECK(binomial_pmf(3, 4, 0.5) == 0.0);
}

TEST_CASE("Yellin") {
    CHECK(yellin_posterior(1, 0.5).value() == doctest::Approx(0.75));
    CHECK(yellin_posterior(0, 0.2).value() == 1.0);
    CHECK(yellin_posterior(3, 0.5).value() > 0.4);
    for (std::uint64_t n = 1; n < 40; ++n)
        for (double p = 0.02; p < 1.0; p += 0.07)
            CHECK(yellin_posterior(n, p).value() >= classical_posterior(n, p).probability.value());
    const double n = 20, p = 0.1;
    CHECK(yellin_posterior(20, 0.1).value() ==
          doctest::Approx((1 - std::pow(1 - p, n + 1)) / ((n + 1) * p)).epsilon(1e-12));
}

}
