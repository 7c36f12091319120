#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

#include "capi.hpp"
#include "commands.hpp"

namespace cli {

namespace {

constexpr double kTwoDecimals = 0.005 + 1e-6;

struct Check {
    std::string name;
    double computed;
    double expected;
    double tolerance;
    bool relative = false;

    bool pass() const {
        const double err = std::fabs(computed - expected);
        return relative ? err <= tolerance * std::fabs(expected) : err <= tolerance;
    }
};

class Sheet {
public:
    explicit Sheet(std::string format) : format_(std::move(format)) {}

    void abs(std::string name, double computed, double expected, double tol) {
        checks_.push_back({std::move(name), computed, expected, tol, false});
    }
    void rel(std::string name, double computed, double expected, double tol) {
        checks_.push_back({std::move(name), computed, expected, tol, true});
    }

    int write(std::ostream& out) const {
        int failed = 0;
        if (format_ == "csv") out << "check,status,computed,expected,tolerance,mode\n";
        for (const auto& c : checks_) {
            const bool ok = c.pass();
            failed += ok ? 0 : 1;
            if (format_ == "csv") {
                out << csv_escape(c.name) << ',' << (ok ? "pass" : "FAIL") << ',' << exact(c.computed) << ','
                    << exact(c.expected) << ',' << exact(c.tolerance) << ',' << (c.relative ? "relative" : "absolute")
                    << '\n';
                continue;
            }
            std::ostringstream tol;
            tol << (c.relative ? "rel " : "abs ") << std::setprecision(3) << c.tolerance;
            out << (ok ? "pass  " : "FAIL  ") << std::left << std::setw(58) << c.name << std::right << std::setw(13)
                << std::setprecision(6) << c.computed << "  expected " << std::setw(11) << c.expected << "  ("
                << tol.str() << ")\n";
        }
        if (format_ != "csv")
            out << checks_.size() - failed << " of " << checks_.size() << " checks pass\n";
        return failed;
    }

private:
    std::string format_;
    std::vector<Check> checks_;
};

// Three subpopulations shared by both tables: sizes 2e7, 1e6, 1e5 and a Beta
// frequency density with sd = p/2 in each.
const std::uint64_t kSizes[3] = {20'000'000, 1'000'000, 100'000};

std::vector<double> uniform_prior() {
    const double total = static_cast<double>(kSizes[0] + kSizes[1] + kSizes[2]);
    return {kSizes[0] / total, kSizes[1] / total, kSizes[2] / total};
}

Population table_population(const double p[3], const std::vector<double>& eps, const std::vector<double>& beta,
                            const Options& opt) {
    (void)opt;
    island_population* raw = nullptr;
    check(island_population_create(&raw));
    Population pop(raw);
    for (int i = 0; i < 3; ++i) {
        island_density* d = nullptr;
        check(island_density_beta_mean_sd(p[i], p[i] / 2, &d));
        const Density own(d);
        check(island_population_add_density(raw, kSizes[i], d, beta[i], eps.empty() ? -1.0 : eps[i]));
    }
    check(island_population_validate(raw));
    return pop;
}

double unknown_posterior(const island_population* pop) {
    double v = 0.0;
    check(island_unknown_subpop_posterior(pop, &v));
    return v;
}

double naive_posterior(const island_population* pop) {
    double v = 0.0;
    check(island_naive_homogeneous_posterior(pop, &v));
    return v;
}

std::vector<double> membership(const island_population* pop) {
    std::vector<double> v(3);
    size_t len = 0;
    check(island_suspect_subpop_posterior(pop, v.data(), v.size(), &len));
    return v;
}

double within(const island_population* pop, std::size_t s) {
    double v = 0.0;
    check(island_uncertain_subpop_posterior(pop, s, 0, &v));
    return v;
}

std::vector<double> normalized(std::vector<double> v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    for (double& x : v) x /= sum;
    return v;
}

void table1(Sheet& sh, const Options& opt) {
    const double p[3] = {1e-8, 1e-7, 1e-6};
    const std::vector<double> eps{0.9, 0.05, 0.05};
    const std::vector<std::vector<double>> betas{{0.999, 0.0005, 0.0005}, uniform_prior(), {0.99, 0.005, 0.005},
                                                 {0.9, 0.05, 0.05}};
    const double expected[4] = {0.50, 0.70, 0.74, 0.84};
    const char* labels[4] = {"(0.999,0.0005,0.0005)", "uniform", "(0.99,0.005,0.005)", "(0.9,0.05,0.05)"};
    for (int r = 0; r < 4; ++r) {
        const Population pop = table_population(p, eps, betas[r], opt);
        const std::string row = "table1 row " + std::to_string(r + 1) + " beta=" + labels[r];
        sh.abs(row + " P(G|I,E)", unknown_posterior(pop.get()), expected[r], kTwoDecimals);
        sh.abs(row + " naive", naive_posterior(pop.get()), 0.79, kTwoDecimals);
    }
}

void table2(Sheet& sh, const Options& opt) {
    const double p[3] = {1e-8, 1e-9, 1e-10};
    // Row 2's epsilon sums to 0.96; the membership posterior is invariant
    // under scaling epsilon, so it is normalized.
    const std::vector<std::vector<double>> eps{uniform_prior(),
                                               normalized({0.9, 0.05, 0.01}),
                                               {0.2, 0.6, 0.2},
                                               {0.1, 0.3, 0.6},
                                               {0.9, 0.09, 0.01},
                                               {0.99, 0.009, 0.001}};
    const std::vector<std::vector<double>> betas{uniform_prior(),    {0.9, 0.05, 0.05},     {0.2, 0.6, 0.2},
                                                 {0.3, 0.3, 0.4},    {0.01, 0.01, 0.98},    {0.001, 0.001, 0.998}};
    const double expected[6] = {0.80, 0.80, 0.98, 0.97, 0.88, 0.57};
    for (int r = 0; r < 6; ++r) {
        const Population pop = table_population(p, eps[r], betas[r], opt);
        const std::string row = "table2 row " + std::to_string(r + 1);
        sh.abs(row + " P(G|I,E)", unknown_posterior(pop.get()), expected[r], kTwoDecimals);
        sh.abs(row + " naive", naive_posterior(pop.get()), 0.79, kTwoDecimals);
    }
}

Population point_population(const std::vector<std::uint64_t>& sizes, const std::vector<double>& p,
                            const std::vector<double>& beta, const std::vector<double>& eps = {}) {
    island_population* raw = nullptr;
    check(island_population_create(&raw));
    Population pop(raw);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        check(island_population_add_point(raw, sizes[i], p[i], beta[i], eps.empty() ? -1.0 : eps[i]));
    check(island_population_validate(raw));
    return pop;
}

Dependence correlated_brothers() {
    island_dependence* raw = nullptr;
    check(island_dependence_create(ISLAND_RATIO_CORRELATION, 1e-7, 0.4, &raw));
    Dependence d(raw);
    size_t ix = 0;
    check(island_dependence_add_group(raw, 3, 0.1, 1e-3, &ix));
    check(island_dependence_set_group_frequency(raw, ix, 1e-7));
    check(island_dependence_add_group(raw, 1'000'000, 0.3e-6, 1e-7, &ix));
    check(island_dependence_set_group_frequency(raw, ix, 1e-7));
    return d;
}

Dependence biased_brothers() {
    island_dependence* raw = nullptr;
    check(island_dependence_create(ISLAND_RATIO_BIAS, 1e-7, 0.4, &raw));
    Dependence d(raw);
    size_t ix = 0;
    check(island_dependence_add_group(raw, 3, 0.1, 1e4, &ix));
    check(island_dependence_set_group_frequency(raw, ix, 1e-7));
    check(island_dependence_add_group(raw, 1'000'000, 0.3e-6, 1.0, &ix));
    check(island_dependence_set_group_frequency(raw, ix, 1e-7));
    return d;
}

void examples(Sheet& sh, const Options& opt) {
    double v = 0.0;
    check(island_probability_from_odds(9.09, &v));
    sh.abs("odds 9.09 as probability", v, 0.901, 0.0005);
    check(island_probability_from_odds(25.0, &v));
    sh.abs("odds 25 as probability", v, 0.9615, 0.00005);

    // Homogeneous population, N = 1e7, p = 1e-8.
    island_odds_result r;
    check(island_classical_posterior(10'000'000, 1e-8, &r));
    sh.abs("classical P(G|I,E) N=1e7 p=1e-8", r.probability, 0.909, 0.0005);
    sh.abs("classical P(G|I,E) two decimals", r.probability, 0.91, kTwoDecimals);
    island_bearers* b = nullptr;
    check(island_bearers_create(10'000'000, 1e-8, ISLAND_BEARERS_GIVEN_I, &b));
    const island_status st = island_bearers_mean(b, &v);
    island_bearers_destroy(b);
    check(st);
    sh.abs("E(U|I) N=1e7 p=1e-8", v, 1.1, 1e-9);

    island_density* raw = nullptr;
    check(island_density_beta_mean_sd(1e-8, 1e-8, &raw));
    const Density sigma_p(raw);
    island_moments m;
    check(island_density_moments(sigma_p.get(), 0, 0, &m));
    sh.rel("p' with sigma=p", m.p_prime, 2e-8, 1e-9);
    check(island_uncertain_posterior(10'000'000, sigma_p.get(), &r));
    sh.abs("uncertain P(G|I,E) sigma=p", r.probability, 0.83, kTwoDecimals);
    sh.abs("uncertain P(G|I,E) sigma=p, 3 digits", r.probability, 0.833, kTwoDecimals / 10);

    // Two subpopulations: N = (1e7, 1e5), p = (1e-9, 1e-8), beta = (0.5, 0.5).
    const Population two = point_population({10'000'000, 100'000}, {1e-9, 1e-8}, {0.5, 0.5});
    std::vector<double> alpha(2);
    size_t len = 0;
    check(island_alpha_from_beta(two.get(), alpha.data(), 2, &len));
    sh.abs("alpha_1", alpha[0], 0.09, kTwoDecimals);
    sh.abs("alpha_2", alpha[1], 0.91, kTwoDecimals);
    check(island_hetero_lr(two.get(), 0, ISLAND_LR_LARGE_N, &v));
    sh.rel("large-N likelihood ratio", v, 1.8e8, 0.0278);
    check(island_hetero_lr(two.get(), 0, ISLAND_LR_CONDITIONAL_ON_I, &v));
    sh.rel("conditional likelihood ratio s in X1", v, 1e9, 1e-12);
    check(island_hetero_posterior(two.get(), 0, &r));
    sh.abs("posterior odds s in X1", r.odds, 9.0, 0.1);
    sh.abs("P(G|I,E) s in X1", r.probability, 0.9, kTwoDecimals);
    check(island_hetero_posterior(two.get(), 1, &r));
    sh.rel("posterior odds s in X2", r.odds, 910.0, 0.011);
    sh.abs("P(G|I,E) s in X2", r.probability, 0.999, 0.0005);

    // Table 1 model.
    const double p1[3] = {1e-8, 1e-7, 1e-6};
    const std::vector<double> eps{0.9, 0.05, 0.05};
    {
        const Population pop = table_population(p1, eps, {0.999, 0.0005, 0.0005}, opt);
        const auto mem = membership(pop.get());
        sh.abs("example 1 P(S in X1|I,E)", mem[0], 0.40, kTwoDecimals);
        sh.abs("example 1 P(S in X3|I,E)", mem[2], 0.56, kTwoDecimals);
        sh.abs("example 1 P(G|I,E,S in X3)", within(pop.get(), 2), 0.32, kTwoDecimals);
    }
    {
        const Population pop = table_population(p1, eps, {0.9, 0.05, 0.05}, opt);
        sh.abs("example 1 last row P(S in X3|I,E)", membership(pop.get())[2], 0.95, kTwoDecimals);
        sh.abs("example 1 last row P(G|I,E,S in X3)", within(pop.get(), 2), 0.89, kTwoDecimals);
    }
    {
        // Example 2: epsilon and beta exchanged.
        const Population pop = table_population(p1, {0.999, 0.0005, 0.0005}, eps, opt);
        const auto mem = membership(pop.get());
        sh.abs("example 2 P(S in X1|I,E)", mem[0], 0.79, kTwoDecimals);
        sh.abs("example 2 P(S in X3|I,E)", mem[2], 0.21, kTwoDecimals);
        sh.abs("example 2 P(G|I,E,S in X1)", within(pop.get(), 0), 0.40, kTwoDecimals);
        sh.abs("example 2 P(G|I,E)", unknown_posterior(pop.get()), 0.50, kTwoDecimals);
    }
    {
        // Example 3: criminal very likely from the suspect's subpopulation;
        // X2 and X3 have the same expected number of bearers.
        const Population in2 = table_population(p1, eps, {0.001, 0.998, 0.001}, opt);
        const Population in3 = table_population(p1, eps, {0.001, 0.001, 0.998}, opt);
        sh.abs("example 3 P(G|I,E,S in X2)", within(in2.get(), 1), 0.89, kTwoDecimals);
        sh.abs("example 3 P(G|I,E,S in X3)", within(in3.get(), 2), 0.89, kTwoDecimals);
    }
    {
        // Membership limits with point frequencies.
        const std::vector<double> p{1e-8, 1e-7, 1e-6}, e{0.5, 0.3, 0.2}, bt{0.6, 0.3, 0.1};
        const Population huge = point_population({1'000'000'000'000'000, 1'000'000'000'000'000, 1'000'000'000'000'000},
                                                 p, bt, e);
        const auto mem = membership(huge.get());
        const double den = p[0] * e[0] + p[1] * e[1] + p[2] * e[2];
        sh.rel("membership, N huge: p_1 eps_1 / sum", mem[0], p[0] * e[0] / den, 1e-3);
        const std::vector<std::uint64_t> n{1000, 2000, 4000};
        const std::vector<double> pr{1e-8, 2e-8, 3e-8};
        const double total = 7000;
        const std::vector<double> u{1000 / total, 2000 / total, 4000 / total};
        const Population rare = point_population(n, pr, u, u);
        const auto mr = membership(rare.get());
        const double bearers = 1000 * pr[0] + 2000 * pr[1] + 4000 * pr[2];
        sh.rel("membership, rare trait: N_3 p_3 / sum", mr[2], 4000 * pr[2] / bearers, 1e-3);
    }

    // Correlated traits and biased search, p = 1e-7.
    {
        const Dependence corr = correlated_brothers();
        island_dependence_result dr;
        check(island_correlated_odds(corr.get(), ISLAND_ON_I, &dr));
        sh.rel("correlation effective LR", dr.effective_lr, 2000.0, 0.01);
        sh.rel("correlation correction", dr.result.correction, 1.0 / 5000, 0.02);
        sh.abs("correlation P(G|I,E)", dr.result.probability, 1.0 - 3.0 / 4000, 1e-4);
        const Dependence bias = biased_brothers();
        check(island_biased_search_odds(bias.get(), &dr));
        sh.rel("biased search P(C=s|S=s,I)", dr.guilt_given_selection, 1.0 / 7500, 0.01);
        sh.abs("biased search P(G|I,E)", dr.result.probability, 1.0 - 3.0 / 4000, 1e-4);
        const double bias_p = dr.result.probability;
        island_dependence* eq = nullptr;
        check(island_bias_correlation_equivalent(bias.get(), &eq));
        const Dependence conv(eq);
        check(island_dependence_group_ratio(eq, 0, &v));
        sh.rel("bias ratio 1e4 as correlation", v, 1e-3, 1e-12);
        check(island_correlated_odds(eq, ISLAND_ON_I, &dr));
        sh.rel("converted spec P(G|I,E)", dr.result.probability, bias_p, 1e-12);
    }

    // Database searches, p = 1e-7.
    island_effectiveness e;
    check(island_database_effectiveness(100'000, 1e-7, 0.2, &e));
    sh.rel("database odds n=1e5 q=0.2", e.odds.odds, 25.0, 1e-9);
    sh.abs("database P(S=C|I,E1) n=1e5", e.odds.probability, 0.96, kTwoDecimals);
    sh.abs("P(E1) n=1e5", e.p_unique, 0.206, 0.0005);
    std::vector<double> dist(3);
    check(island_match_count_distribution(100'000, 1e-7, 0.2, 2, dist.data(), 3, &len));
    sh.abs("P(more than one match) n=1e5", 1.0 - dist[0] - dist[1], 0.002, 0.0005);
    check(island_database_effectiveness(2'000'000, 1e-7, 0.5, &e));
    sh.rel("database odds n=2e6 q=0.5", e.odds.odds, 5.0, 1e-9);
    sh.abs("P(E1) n=2e6", e.p_unique, 0.491, 0.0005);
    check(island_match_count_distribution(2'000'000, 1e-7, 0.5, 2, dist.data(), 3, &len));
    sh.abs("P(no match) n=2e6", dist[0], 0.40, 0.05);
    sh.abs("P(two or more matches) n=2e6", 1.0 - dist[0] - dist[1], 0.10, 0.05);
    sh.abs("P(two matches) n=2e6", dist[2], 0.09, kTwoDecimals);
    check(island_double_match_coincidence(2'000'000, 1e-7, 0.5, &v));
    sh.abs("P(both coincidental | two matches) n=2e6", v, 0.1, 0.02);

    // Random-sample database: odds 1/(p(N-n)).
    const std::uint64_t pop_n = 20'000'000;
    const std::uint64_t sizes[4] = {50'000, 200'000, 5'000'000, 10'000'000};
    std::vector<double> odds(4), uniq(4);
    check(island_growth_curve(pop_n, 1e-8, ISLAND_INCLUSION_RANDOM_SAMPLE, sizes, 1, odds.data(), uniq.data()));
    sh.rel("random sample odds n=5e4", odds[0], 1.0 / (1e-8 * (pop_n - 50'000)), 1e-9);
    check(island_growth_curve(pop_n, 1e-8, ISLAND_INCLUSION_SQRT_WEIGHTED, sizes, 4, odds.data(), uniq.data()));
    const double want[4] = {105, 55, 20, 24};
    for (int i = 0; i < 4; ++i)
        sh.rel("sqrt-weighted odds n=" + std::to_string(sizes[i]), odds[i], want[i], 0.02);
    sh.abs("sqrt inclusion at 10%", std::sqrt(0.1), 0.31, kTwoDecimals);
    sh.abs("sqrt inclusion at 30%", std::sqrt(0.3), 0.55, kTwoDecimals);
    std::vector<std::uint64_t> grid(200);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = (i + 1) * (pop_n / 200);
    std::vector<double> go(grid.size()), gu(grid.size());
    check(island_growth_curve(pop_n, 1e-8, ISLAND_INCLUSION_SQRT_WEIGHTED, grid.data(), grid.size(), go.data(),
                              gu.data()));
    std::size_t best = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (go[i] < go[best]) best = i;
    sh.rel("sqrt-weighted minimum location / N", static_cast<double>(grid[best]) / pop_n, 0.25, 1e-12);
}

}  // namespace

int reproduce(const std::string& target, const Options& opt, std::ostream& out) {
    Sheet sh(opt.format.empty() ? "table" : opt.format);
    if (target == "table1") table1(sh, opt);
    else if (target == "table2") table2(sh, opt);
    else if (target == "examples") examples(sh, opt);
    else invalid("reproduce", "unknown target \"" + target + "\" (expected table1, table2 or examples)");
    return sh.write(out);
}

}  // namespace cli
