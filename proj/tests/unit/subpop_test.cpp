#include "island/classical.hpp"
#include "island/subpop.hpp"
#include "support.hpp"

using namespace island;
using namespace island::subpop;

namespace {

PopulationModel points(std::vector<std::uint64_t> n, std::vector<double> p, std::vector<double> beta) {
    std::vector<Subpopulation> sp;
    for (std::size_t i = 0; i < n.size(); ++i)
        sp.push_back({n[i], PointFrequency{p[i]}, Probability(beta[i]), std::nullopt});
    return PopulationModel(sp);
}

const PopulationModel& two() {
    static const PopulationModel m = points({10'000'000, 100'000}, {1e-9, 1e-8}, {0.5, 0.5});
    return m;
}

}  // namespace

TEST_SUITE("subpop") {

TEST_CASE("alpha from beta") {
    const auto a = alpha_from_beta(two());
    CHECK(a[0].value() == doctest::Approx(1.0 / 11));
    CHECK(a[1].value() == doctest::Approx(10.0 / 11));
    const auto b = alpha_from_beta(points({3, 3}, {0.1, 0.05}, {0.2, 0.8}));
    CHECK(b[0].value() == doctest::Approx(1.0 / 3));
    const auto same = alpha_from_beta(points({3, 4, 5}, {0.2, 0.2, 0.2}, {0.1, 0.3, 0.6}));
    CHECK(same[2].value() == doctest::Approx(0.6));
}

TEST_CASE("posterior odds") {
    CHECK(hetero_posterior_odds(two(), 0).odds.value() == doctest::Approx(9.09).epsilon(0.01));
    CHECK(hetero_posterior_odds(two(), 1).odds.value() == doctest::Approx(909).epsilon(0.01));
    CHECK(hetero_posterior_odds(two(), 1).probability.value() == doctest::Approx(0.999).epsilon(5e-4));
    const auto one = points({11}, {0.2}, {1.0});
    CHECK(hetero_posterior_odds(one, 0).odds.value() ==
          doctest::Approx(classical::classical_posterior(10, 0.2).odds.value()).epsilon(1e-12));
    const auto m = points({4, 9, 2}, {0.3, 0.05, 0.6}, {0.2, 0.5, 0.3});
    for (std::size_t s = 0; s < 3; ++s)
        CHECK(hetero_posterior_odds_joint(m, s).odds.value() ==
              doctest::Approx(hetero_posterior_odds(m, s).odds.value()).epsilon(1e-12));
    CHECK(hetero_posterior_odds(points({1}, {0.3}, {1.0}), 0).odds.is_infinite());
    CHECK_ERROR(hetero_posterior_odds(m, 5), index);
}

TEST_CASE("likelihood ratio conventions") {
    CHECK(hetero_lr(two(), 0, LrConvention::large_N).value == doctest::Approx(1.818e8).epsilon(1e-3));
    CHECK(hetero_lr(two(), 0, LrConvention::conditional_on_I).value == doctest::Approx(1e9));
    const auto m = points({4, 9}, {0.3, 0.05}, {0.2, 0.8});
    const double pb = 0.3 * 0.2 + 0.05 * 0.8;
    CHECK(hetero_lr(m, 0, LrConvention::joint_I_and_E).value ==
          doctest::Approx((4 - 0.2) / (4 * pb - 0.3 * 0.2)).epsilon(1e-12));
    const auto def1 = points({1, 50}, {0.01, 0.2}, {0.1, 0.9});
    const auto def2 = points({1, 50}, {0.01, 0.2}, {0.6, 0.4});
    CHECK(hetero_lr(def1, 0, LrConvention::default_population).value == doctest::Approx(5.0));
    CHECK(hetero_lr(def2, 0, LrConvention::default_population).value == doctest::Approx(5.0));
    CHECK_ERROR(hetero_lr(m, 0, LrConvention::default_population), convention_mismatch);
    CHECK_ERROR(hetero_lr(m, 0, LrConvention::conservative), convention_mismatch);
}

TEST_CASE("large-N gap shrinks with N") {
    double last = 1.0;
    for (std::uint64_t n = 10; n <= 10'000'000; n *= 10) {
        const auto m = points({n, n}, {0.01, 0.02}, {0.3, 0.7});
        const double gap = std::fabs(hetero_lr(m, 0, LrConvention::large_N).value /
                                         hetero_lr(m, 0, LrConvention::joint_I_and_E).value -
                                     1.0);
        CHECK(gap < last);
        last = gap;
    }
}

TEST_CASE("marginal over the suspect") {
    const auto one = points({11}, {0.2}, {1.0});
    CHECK(hetero_posterior_marginal(one).value() ==
          doctest::Approx(classical::classical_posterior(10, 0.2).probability.value()));
    const auto m = points({8, 4}, {0.25, 0.5}, {0.6, 0.4});
    const double lo = std::min(hetero_posterior_odds(m, 0).probability.value(),
                               hetero_posterior_odds(m, 1).probability.value());
    const double hi = std::max(hetero_posterior_odds(m, 0).probability.value(),
                               hetero_posterior_odds(m, 1).probability.value());
    for (auto w : {MarginalWeights::exact, MarginalWeights::trait_frequency}) {
        const double v = hetero_posterior_marginal(m, w).value();
        CHECK(v >= lo);
        CHECK(v <= hi);
    }
    const auto skew = points({100, 100}, {1e-8, 1e-2}, {0.5, 0.5});
    CHECK(hetero_posterior_marginal(skew).value() ==
          doctest::Approx(hetero_posterior_odds(skew, 1).probability.value()).epsilon(1e-5));
}

TEST_CASE("expected bearers") {
    const auto m = points({8, 4}, {0.25, 0.5}, {2.0 / 3, 1.0 / 3});
    CHECK(hetero_expected_bearers(m, 0) == doctest::Approx(4.75));
    CHECK(1.0 / hetero_expected_bearers(m, 0) ==
          doctest::Approx(hetero_posterior_odds(m, 0).probability.value()).epsilon(1e-12));
    CHECK(hetero_expected_bearers(points({21}, {0.1}, {1.0}), 0) == doctest::Approx(3.0));
    CHECK_ERROR(hetero_expected_bearers(points({8, 4}, {0.25, 0.5}, {0.5, 0.5}), 0), precondition);
}

}
