#include <cmath>
#include <random>

#include "island/classical.hpp"
#include "island/density.hpp"
#include "island/subpop.hpp"
#include "island/uncertain.hpp"
#include "support.hpp"

using namespace island;
using namespace island::uncertain;

namespace {

PopulationModel table1(std::vector<double> beta, std::vector<double> eps = {0.9, 0.05, 0.05}) {
    const std::uint64_t n[3] = {20'000'000, 1'000'000, 100'000};
    const double p[3] = {1e-8, 1e-7, 1e-6};
    std::vector<Subpopulation> sp;
    for (int i = 0; i < 3; ++i)
        sp.push_back({n[i], FrequencyDensity::beta_from_mean_sd(p[i], p[i] / 2), Probability(beta[i]),
                      Probability(eps[i])});
    return PopulationModel(sp);
}

}  // namespace

TEST_SUITE("uncertain") {

TEST_CASE("Beta density basics") {
    const auto d = FrequencyDensity::beta_from_mean_sd(0.2, 0.1);
    CHECK(d.mean() == doctest::Approx(0.2));
    CHECK(d.moments().variance == doctest::Approx(0.01));
    CHECK_ERROR(FrequencyDensity::beta(0.0, 1.0), domain);
    const auto tab = FrequencyDensity::tabulated(FrequencyDensity::beta(2, 3).tabulate());
    CHECK(tab.mean() == doctest::Approx(0.4).epsilon(1e-9));
    CHECK_ERROR(FrequencyDensity::tabulated(std::vector<double>(9, 0.0)), numerical_domain);
    CHECK_ERROR(FrequencyDensity::tabulated(std::vector<double>{1.0, -1.0, 1.0}), domain);
}

TEST_CASE("forward transforms") {
    const auto chi_i = transform_density(FrequencyDensity::beta(1, 1), Direction::crime_to_suspect);
    REQUIRE(chi_i.is_beta());
    CHECK(chi_i.beta_params()->a == 2.0);
    CHECK(chi_i.stage() == DensityStage::prior_to_suspect);
    const auto chi_ie = transform_density(chi_i, Direction::suspect_to_match, 1);
    CHECK(chi_ie.stage() == DensityStage::post_match);
    const auto v = chi_ie.tabulate();
    const auto t = grid_nodes(static_cast<int>(v.size()));
    double worst = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k)
        worst = std::max(worst, std::fabs(v[k] - 2 * t[k] * (1 + t[k]) / (1 + 2.0 / 3)));
    CHECK(worst <= 1e-9);
    CHECK_ERROR(transform_density(chi_i, Direction::crime_to_suspect), stage);
    CHECK_ERROR(transform_density(chi_i, Direction::suspect_to_match), validation);
}

TEST_CASE("round trips") {
    const auto chi = FrequencyDensity::tabulated(FrequencyDensity::beta(3, 7).tabulate());
    const auto chi_i = transform_density(chi, Direction::crime_to_suspect);
    const auto back = transform_density(chi_i, Direction::suspect_to_crime);
    const auto a = chi.tabulate(), b = back.tabulate();
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::fabs(a[k] - b[k]));
    CHECK(worst <= 1e-8);
    const auto ie = transform_density(chi_i, Direction::suspect_to_match, 12);
    const auto i2 = transform_density(ie, Direction::match_to_suspect);
    const auto c = chi_i.tabulate(), e = i2.tabulate();
    worst = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) worst = std::max(worst, std::fabs(c[k] - e[k]));
    CHECK(worst <= 1e-8);
    CHECK_ERROR(transform_density(ie, Direction::match_to_suspect, 13), validation);
}

TEST_CASE("moments") {
    const auto m = frequency_moments(FrequencyDensity::beta(1, 1), 1);
    CHECK(m.p == doctest::Approx(0.5));
    CHECK(m.p_prime == doctest::Approx(2.0 / 3));
    REQUIRE(m.p_double_prime);
    CHECK(*m.p_double_prime == doctest::Approx(0.7));
    const auto s = frequency_moments(FrequencyDensity::beta_from_mean_sd(1e-8, 1e-8));
    CHECK(s.p_prime == doctest::Approx(2e-8).epsilon(1e-9));
    const auto point = frequency_moments(PointFrequency{0.3}, 5);
    CHECK(point.p == point.p_prime);
    CHECK(point.p_prime == *point.p_double_prime);
    const auto narrow = frequency_moments(FrequencyDensity::beta_from_mean_sd(0.3, 1e-9), 5);
    CHECK(narrow.p_prime == doctest::Approx(narrow.p).epsilon(1e-12));
    CHECK(*narrow.p_double_prime == doctest::Approx(narrow.p).epsilon(1e-9));
}

TEST_CASE("moment ordering on random densities") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> shape(0.3, 30.0);
    for (int i = 0; i < 300; ++i) {
        const auto m = frequency_moments(FrequencyDensity::beta(shape(rng), shape(rng)), 1 + rng() % 1000);
        CHECK(m.p <= m.p_prime);
        CHECK(m.p_prime <= *m.p_double_prime);
    }
}

TEST_CASE("posterior with uncertain frequency") {
    const auto r = uncertain_posterior(10'000'000, FrequencyDensity::beta_from_mean_sd(1e-8, 1e-8));
    CHECK(r.probability.value() == doctest::Approx(0.8333).epsilon(1e-3));
    CHECK(r.lr.value == doctest::Approx(5e7));
    const double atoms[2] = {0.25, 0.75}, w[2] = {0.5, 0.5};
    CHECK(uncertain_posterior(3, FrequencyDensity::discrete_mixture(atoms, w)).probability.value() ==
          doctest::Approx(1 / (1 + 3 * 0.625)).epsilon(1e-12));
    CHECK(uncertain_posterior(7, PointFrequency{0.2}).probability.value() ==
          doctest::Approx(classical::classical_posterior(7, 0.2).probability.value()));
    double last = 1.0;
    for (double sd = 0.01; sd < 0.2; sd += 0.02) {
        const double v = uncertain_posterior(50, FrequencyDensity::beta_from_mean_sd(0.3, sd)).probability.value();
        CHECK(v < last);
        last = v;
    }
    CHECK_ERROR(uncertain_posterior(3, FrequencyDensity::beta(2, 2, DensityStage::prior_to_suspect)), stage);
}

TEST_CASE("identity chain with uncertainty") {
    for (const auto& d : {FrequencyDensity::beta(2, 9), FrequencyDensity::beta_from_mean_sd(0.05, 0.02)})
        for (std::uint64_t n : {1, 10, 300}) {
            const double post = uncertain_posterior(n, d).probability.value();
            CHECK(1.0 / expected_bearers_given_I(n, d) == doctest::Approx(post).epsilon(1e-9));
            CHECK(expected_inverse_bearers_given_I_E(n, d) == doctest::Approx(post).epsilon(1e-9));
        }
    CHECK_ERROR(expected_inverse_bearers_given_I_E(5000, FrequencyDensity::beta(2, 9)), capacity);
}

TEST_CASE("subpopulation posterior") {
    CHECK(uncertain_subpop_posterior(table1({0.999, 0.0005, 0.0005}), 2).value() ==
          doctest::Approx(0.32).epsilon(0.015));
    const PopulationModel point({{5, PointFrequency{0.1}, Probability(0.4), std::nullopt},
                                 {7, PointFrequency{0.3}, Probability(0.6), std::nullopt}});
    for (std::size_t s = 0; s < 2; ++s)
        CHECK(uncertain_subpop_posterior(point, s).value() ==
              doctest::Approx(subpop::hetero_posterior_odds(point, s).probability.value()).epsilon(1e-12));
    // The large-N form drops the leading 1, so it needs a large excess.
    const PopulationModel big({{1'000'000, FrequencyDensity::beta_from_mean_sd(1e-4, 5e-5), Probability(1.0),
                                std::nullopt}});
    CHECK(uncertain_subpop_posterior(big, 0, true).value() == doctest::Approx(1.0 / 125).epsilon(1e-9));
    CHECK(uncertain_subpop_posterior(big, 0, true).value() ==
          doctest::Approx(uncertain_subpop_posterior(big, 0).value()).epsilon(0.01));
    CHECK_ERROR(uncertain_subpop_posterior(big, 3), index);
}

TEST_CASE("subpopulation likelihood ratios") {
    const PopulationModel point({{5, PointFrequency{0.1}, Probability(0.4), std::nullopt},
                                 {7, PointFrequency{0.3}, Probability(0.6), std::nullopt}});
    CHECK(uncertain_subpop_lr(point, 0, LrConvention::joint_I_and_E).value ==
          doctest::Approx(subpop::hetero_lr(point, 0, LrConvention::joint_I_and_E).value).epsilon(1e-12));
    const PopulationModel sig({{5, FrequencyDensity::beta_from_mean_sd(0.1, 0.1), Probability(1.0), std::nullopt}});
    CHECK(uncertain_subpop_lr(sig, 0, LrConvention::conservative).value == doctest::Approx(1 / 0.2));
    const auto m = table1({0.9, 0.05, 0.05});
    const double p3 = 1e-6, sigma2 = p3 * p3 / 4;
    const double pb = 0.9e-8 + 0.05e-7 + 0.05e-6;
    CHECK(uncertain_subpop_lr(m, 2, LrConvention::large_N).value ==
          doctest::Approx(1 / (pb + 0.05 * sigma2 / p3)).epsilon(1e-9));
    CHECK_ERROR(uncertain_subpop_lr(m, 2, LrConvention::default_population), convention_mismatch);
}

TEST_CASE("membership") {
    const auto m = table1({0.999, 0.0005, 0.0005});
    const auto mem = suspect_subpop_posterior(m);
    CHECK(mem[0].value() == doctest::Approx(0.40).epsilon(0.02));
    CHECK(mem[2].value() == doctest::Approx(0.56).epsilon(0.02));
    CHECK(std::fabs(mem[0].value() + mem[1].value() + mem[2].value() - 1.0) <= 1e-10);
    CHECK(unknown_subpop_posterior(m).value() == doctest::Approx(0.50).epsilon(0.01));
    CHECK(naive_homogeneous_posterior(m).value() == doctest::Approx(0.7913).epsilon(1e-3));
    CHECK(unknown_subpop_posterior(m.swapped_priors()).value() ==
          doctest::Approx(unknown_subpop_posterior(m).value()).epsilon(1e-12));
    const PopulationModel no_eps({{5, PointFrequency{0.1}, Probability(1.0), std::nullopt}});
    CHECK_ERROR(unknown_subpop_posterior(no_eps), validation);
}

TEST_CASE("certain membership reduces to the known-subpopulation case") {
    const PopulationModel m({{20, FrequencyDensity::beta(2, 20), Probability(0.3), Probability(0.0)},
                             {10, FrequencyDensity::beta(3, 10), Probability(0.7), Probability(1.0)}});
    CHECK(unknown_subpop_posterior(m).value() == doctest::Approx(uncertain_subpop_posterior(m, 1).value()).epsilon(1e-12));
}

TEST_CASE("naive column reductions") {
    const PopulationModel one({{11, FrequencyDensity::beta(2, 30), Probability(1.0), std::nullopt}});
    CHECK(naive_homogeneous_posterior(one).value() ==
          doctest::Approx(uncertain_posterior(10, FrequencyDensity::beta(2, 30)).probability.value()));
    const PopulationModel pooled({{6, PointFrequency{0.1}, Probability(0.5), std::nullopt},
                                  {5, PointFrequency{0.4}, Probability(0.5), std::nullopt}});
    CHECK(naive_homogeneous_posterior(pooled).value() ==
          doctest::Approx(classical::classical_posterior(10, 0.1).probability.value()));
}

}
