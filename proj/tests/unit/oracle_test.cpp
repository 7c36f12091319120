#include <cstdio>

#include "island/classical.hpp"
#include "island/oracle.hpp"
#include "island/philox.hpp"
#include "support.hpp"

using namespace island;
using namespace island::oracle;

namespace {

double exact(const ScenarioSpec& s, const char* ev, const char* given) {
    return exact_posterior(s, parse_event(ev), parse_event(given)).value;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("Philox known answer") {
    const auto zero = rng::philox4x32_10({0, 0, 0, 0}, {0, 0});
    CHECK(zero[0] == 0x6627e8d5u);
    CHECK(zero[1] == 0xe169c58du);
    CHECK(zero[2] == 0xbc57ac4cu);
    CHECK(zero[3] == 0x9b00dbd8u);
    const auto ones = rng::philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                         {0xffffffffu, 0xffffffffu});
    CHECK(ones[0] == 0x408f276du);
    CHECK(ones[1] == 0x41c83b0eu);
    CHECK(ones[2] == 0xa20bc7c6u);
    CHECK(ones[3] == 0x6d5451fdu);
}

TEST_CASE("event parsing") {
    const auto e = parse_event("I & E & S=3 & !C_in=1 & ED=2");
    REQUIRE(e.atoms.size() == 5);
    CHECK(e.atoms[2].kind == AtomKind::S_is);
    CHECK(e.atoms[2].arg == 3);
    CHECK(e.atoms[3].negated);
    CHECK(parse_event(to_string(e)).atoms.size() == 5);
    CHECK_ERROR(parse_event("I & Q"), validation);
    CHECK_ERROR(parse_event("S="), validation);
}

TEST_CASE("exact classical and search") {
    CHECK(exact(classical_scenario(3, 0.5), "G", "I & E") == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(exact(yellin_scenario(1, 0.5), "G", "I & E") == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(exact(classical_scenario(2, 0.5), "G", "I") == doctest::Approx(1.0 / 3).epsilon(1e-12));
}

TEST_CASE("exact correlated pair") {
    ScenarioSpec s;
    s.subpop = {0, 0};
    s.criminal_prior = {0.5, 0.5};
    s.gamma = JointGamma{{0.4, 0.1, 0.1, 0.4}};
    s.suspect = IndependentSuspect{{1.0, 0.0}};
    CHECK(exact(s, "G", "I & E") == doctest::Approx(1.25 / 2.25).epsilon(1e-12));
}

TEST_CASE("bearer distribution") {
    const auto s = classical_scenario(2, 0.5);
    const auto b = classical::bearers_given_I(2, 0.5);
    // U = 3 exactly when the two others carry the trait.
    CHECK(exact(s, "E", "I") == doctest::Approx(b.mean() / 3).epsilon(1e-12));
}

TEST_CASE("errors") {
    CHECK_ERROR(exact_posterior(classical_scenario(25, 0.1), parse_event("G"), parse_event("I")), capacity);
    ScenarioSpec never = classical_scenario(3, 0.5);
    CHECK_ERROR(exact(never, "G", "I & !I"), conditioning_impossible);
    CHECK_ERROR(mc_posterior(classical_scenario(3, 0.5), parse_event("G"), parse_event("I & E"), 100, 1),
                validation);
    CHECK_ERROR(mc_posterior(classical_scenario(30, 1e-4), parse_event("G"), parse_event("I & E"), 20'000, 1),
                infeasible_conditioning);
    ScenarioSpec bad = classical_scenario(3, 0.5);
    bad.criminal_prior = {0.5, 0.5, 0.5, 0.5};
    CHECK_ERROR(bad.validate(), validation);
}

TEST_CASE("Monte-Carlo") {
    const auto s = classical_scenario(100, 0.05);
    const auto a = mc_posterior(s, parse_event("G"), parse_event("I & E"), 1'000'000, 42, 1);
    const auto b = mc_posterior(s, parse_event("G"), parse_event("I & E"), 1'000'000, 42, 4);
    CHECK(a.value == b.value);
    CHECK(a.accepted == b.accepted);
    REQUIRE(a.std_error);
    CHECK(*a.std_error > 0);
    CHECK(std::fabs(a.value - 1.0 / 6) <= 4 * *a.std_error);
    CHECK(a.seed == 42u);
    const auto c = mc_posterior(s, parse_event("G"), parse_event("I & E"), 1'000'000, 43, 1);
    CHECK(c.value != a.value);
}

TEST_CASE("Monte-Carlo on the larger scenarios") {
    const auto h = hetero_scenario({40, 10}, {0.1, 0.3}, {0.5, 0.5}, 1);
    const auto e = mc_posterior(h, parse_event("G"), parse_event("I & E"), 1'000'000, 7);
    // 1/(N_s sum p beta / beta_s - p_s + 1) for s in X2.
    const double odds = 1.0 / (10 * (0.1 * 0.5 + 0.3 * 0.5) / 0.5 - 0.3);
    CHECK(std::fabs(e.value - odds / (1 + odds)) <= 4 * *e.std_error);
    const std::vector<double> prior(20, 1.0 / 20);
    const auto d = mc_posterior(database_scenario(20, 5, 0.2, prior), parse_event("G"), parse_event("I & E1"),
                                1'000'000, 9);
    const double q = 0.25, eff = q / (1 - q) / (5 * 0.2);
    CHECK(std::fabs(d.value - eff / (1 + eff)) <= 4 * *d.std_error);
}

TEST_CASE("joint law sums to one") {
    const auto s = hetero_scenario({3, 4}, {0.2, 0.6}, {0.3, 0.7}, std::nullopt);
    const auto all = exact_posterior(s, parse_event("G"), Event{});
    REQUIRE(all.total_mass);
    CHECK(std::fabs(*all.total_mass - 1.0) <= 1e-12);
}

}
