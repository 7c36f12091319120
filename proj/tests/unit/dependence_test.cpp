#include "island/dependence.hpp"
#include "support.hpp"

using namespace island;
using namespace island::dependence;

namespace {

GroupedDependencySpec brothers(RatioKind kind, double sibling_ratio, double other_ratio) {
    GroupedDependencySpec s;
    s.kind = kind;
    s.suspect_frequency = 1e-7;
    s.suspect_prior_given_I = 0.4;
    s.groups.push_back({3, 0.1, std::nullopt, sibling_ratio, 1e-7, std::nullopt});
    s.groups.push_back({1'000'000, 0.3e-6, std::nullopt, other_ratio, 1e-7, std::nullopt});
    return s;
}

GroupedDependencySpec small(RatioKind kind, std::vector<double> ratios) {
    GroupedDependencySpec s;
    s.kind = kind;
    s.suspect_frequency = 0.5;
    s.suspect_prior_given_I = 0.4;
    for (double r : ratios) s.groups.push_back({1, 0.3, std::nullopt, r, 0.5, std::nullopt});
    return s;
}

}  // namespace

TEST_SUITE("dependence") {

TEST_CASE("biased search") {
    const auto r = biased_search_odds(brothers(RatioKind::bias_sigma, 1e4, 1.0));
    CHECK(r.result.probability.value() == doctest::Approx(1 - 3.0 / 4000).epsilon(1e-4));
    REQUIRE(r.guilt_given_selection);
    CHECK(*r.guilt_given_selection == doctest::Approx(1.0 / 7500).epsilon(0.01));
    CHECK(biased_search_odds(small(RatioKind::bias_sigma, {2, 1})).result.odds.value() ==
          doctest::Approx(0.8 / 0.9));
    const auto plain = biased_search_odds(small(RatioKind::bias_sigma, {1, 1}));
    CHECK(plain.result.odds.value() == doctest::Approx(2 * 0.4 / 0.6));
    const auto zero = biased_search_odds(small(RatioKind::bias_sigma, {0, 0}));
    CHECK(zero.result.odds.is_infinite());
    CHECK(zero.result.degenerate);
    CHECK_ERROR(biased_search_odds(small(RatioKind::correlation_c, {0.5, 0.5})), validation);
}

TEST_CASE("correlated traits") {
    const auto r = correlated_odds(brothers(RatioKind::correlation_c, 1e-3, 1e-7), Conditioning::on_I);
    CHECK(r.result.correction == doctest::Approx(1.0 / 5000).epsilon(0.02));
    CHECK(r.effective_lr == doctest::Approx(2000).epsilon(0.01));
    CHECK(r.result.probability.value() == doctest::Approx(1 - 3.0 / 4000).epsilon(1e-4));
    const auto indep = correlated_odds(small(RatioKind::correlation_c, {0.5, 0.5}), Conditioning::on_I);
    CHECK(indep.result.correction == doctest::Approx(1.0));
    CHECK(indep.result.odds.value() ==
          doctest::Approx(indep.result.prior_odds.value() / 0.5));
}

TEST_CASE("exchangeable pair") {
    GroupedDependencySpec s;
    s.suspect_frequency = 0.5;
    s.suspect_prior_given_I = 0.5;
    s.suspect_prior_unconditioned = 0.5;
    s.groups.push_back({1, 0.5, 0.5, 0.8, 0.5, 0.8});
    CHECK(correlated_odds(s, Conditioning::on_I).result.odds.value() == doctest::Approx(1.25));
    CHECK(correlated_odds(s, Conditioning::unconditioned).result.odds.value() == doctest::Approx(1.25));
}

TEST_CASE("both conditionings agree") {
    // Three individuals, pairwise law consistent with priors (0.5, 0.2, 0.3).
    const double p0 = 0.2, p1 = 0.4, p2 = 0.1, both01 = 0.12, both02 = 0.05;
    const double pi0 = 0.5, pi1 = 0.2, pi2 = 0.3;
    const double z = pi0 * p0 + pi1 * p1 + pi2 * p2;
    GroupedDependencySpec s;
    s.suspect_frequency = p0;
    s.suspect_prior_given_I = pi0 * p0 / z;
    s.suspect_prior_unconditioned = pi0;
    s.groups.push_back({1, pi1 * p1 / z, pi1, both01 / p1, p1, both01 / p0});
    s.groups.push_back({1, pi2 * p2 / z, pi2, both02 / p2, p2, both02 / p0});
    const auto a = correlated_odds(s, Conditioning::on_I), b = correlated_odds(s, Conditioning::unconditioned);
    CHECK(a.result.odds.value() == doctest::Approx(b.result.odds.value()).epsilon(1e-12));
    CHECK(a.result.prior_odds.value() != doctest::Approx(b.result.prior_odds.value()));
    CHECK(a.result.correction != doctest::Approx(b.result.correction));
    auto bad = s;
    bad.groups[0].reverse_ratio = 0.9;
    CHECK_ERROR(correlated_odds(bad, Conditioning::unconditioned), validation);
    auto missing = s;
    missing.suspect_prior_unconditioned.reset();
    CHECK_ERROR(correlated_odds(missing, Conditioning::unconditioned), validation);
}

TEST_CASE("bias to correlation") {
    const auto bias = brothers(RatioKind::bias_sigma, 1e4, 1.0);
    const auto c = bias_correlation_equivalent(bias);
    CHECK(c.kind == RatioKind::correlation_c);
    CHECK(c.groups[0].ratio == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(c.groups[1].ratio == doctest::Approx(1e-7).epsilon(1e-12));
    CHECK(correlated_odds(c, Conditioning::on_I).result.odds.value() ==
          doctest::Approx(biased_search_odds(bias).result.odds.value()).epsilon(1e-12));
    auto far = small(RatioKind::bias_sigma, {2.0, 1.0});
    far.suspect_frequency = 0.6;
    CHECK_ERROR(bias_correlation_equivalent(far), no_equivalent);
    auto no_freq = small(RatioKind::bias_sigma, {1.0});
    no_freq.groups[0].frequency.reset();
    CHECK_ERROR(bias_correlation_equivalent(no_freq), domain);
}

TEST_CASE("spec validation") {
    auto s = small(RatioKind::correlation_c, {0.5, 0.5});
    s.suspect_prior_given_I = 0.5;
    CHECK_ERROR(s.validate(), domain);
    auto t = small(RatioKind::correlation_c, {1.5, 0.5});
    CHECK_ERROR(t.validate(), domain);
    auto u = small(RatioKind::correlation_c, {0.5});
    u.groups[0].prior_given_I = 0.6;
    u.groups[0].frequency = 0.0;
    CHECK_ERROR(u.validate(), domain);
}

}
