#include "oracle_suite.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "island/classical.hpp"
#include "island/database.hpp"
#include "island/dependence.hpp"
#include "island/density.hpp"
#include "island/population.hpp"
#include "island/subpop.hpp"
#include "island/uncertain.hpp"

namespace suite {

using namespace island;
using oracle::ScenarioSpec;

namespace {

double exact(const ScenarioSpec& spec, const std::string& event, const std::string& given) {
    return oracle::exact_posterior(spec, oracle::parse_event(event), oracle::parse_event(given)).value;
}

template <typename T>
std::string list(const std::vector<T>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

PopulationModel point_model(const std::vector<std::size_t>& sizes, const std::vector<double>& p,
                            const std::vector<double>& beta, const std::vector<double>& eps = {}) {
    std::vector<Subpopulation> sp;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Subpopulation s{sizes[i], PointFrequency{p[i]}, Probability(beta[i]), std::nullopt};
        if (!eps.empty()) s.epsilon = Probability(eps[i]);
        sp.push_back(s);
    }
    return PopulationModel(sp);
}

PopulationModel mixture_model(const std::vector<std::size_t>& sizes, const std::vector<std::vector<double>>& atoms,
                              const std::vector<std::vector<double>>& weights, const std::vector<double>& beta,
                              const std::vector<double>& eps = {}) {
    std::vector<Subpopulation> sp;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        Subpopulation s{sizes[i], FrequencyDensity::discrete_mixture(atoms[i], weights[i]), Probability(beta[i]),
                        std::nullopt};
        if (!eps.empty()) s.epsilon = Probability(eps[i]);
        sp.push_back(s);
    }
    return PopulationModel(sp);
}

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n, double floor = 0.05) {
    std::uniform_real_distribution<double> u(floor, 1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (auto& x : v) sum += (x = u(rng));
    for (auto& x : v) x /= sum;
    return v;
}

void classical_family(std::vector<GridCase>& out) {
    for (std::size_t n : {1, 2, 3, 5, 8, 11})
        for (double p : {0.05, 0.2, 0.5, 0.8, 0.95}) {
            const std::string name = "N=" + std::to_string(n) + " p=" + std::to_string(p);
            out.push_back({"classical", name, classical::classical_posterior(n, p).probability.value(),
                           exact(oracle::classical_scenario(n, p), "G", "I & E")});
            out.push_back({"yellin", name, classical::yellin_posterior(n, p).value(),
                           exact(oracle::yellin_scenario(n, p), "G", "I & E")});
        }
}

struct HeteroCase {
    std::vector<std::size_t> sizes;
    std::vector<double> p;
    std::vector<double> beta;
};

const std::vector<HeteroCase>& hetero_cases() {
    static const std::vector<HeteroCase> c{
        {{2, 3}, {0.1, 0.4}, {0.5, 0.5}},
        {{1, 4}, {0.3, 0.05}, {0.2, 0.8}},
        {{3, 3}, {0.2, 0.2}, {0.7, 0.3}},
        {{4, 2}, {0.01, 0.6}, {0.9, 0.1}},
        {{2, 2, 3}, {0.1, 0.3, 0.5}, {0.2, 0.3, 0.5}},
        {{1, 2, 4}, {0.4, 0.1, 0.05}, {0.6, 0.3, 0.1}},
        {{3, 1, 2}, {0.25, 0.75, 0.5}, {0.34, 0.33, 0.33}},
        {{5, 3}, {0.15, 0.35}, {0.45, 0.55}},
    };
    return c;
}

void hetero_family(std::vector<GridCase>& out) {
    for (const auto& hc : hetero_cases()) {
        const auto model = point_model(hc.sizes, hc.p, hc.beta);
        const std::string tag = "N=" + list(hc.sizes) + " p=" + list(hc.p) + " beta=" + list(hc.beta);
        const auto alpha = subpop::alpha_from_beta(model);
        const auto free = oracle::hetero_scenario(hc.sizes, hc.p, hc.beta, std::nullopt);
        for (std::size_t i = 0; i < hc.sizes.size(); ++i)
            out.push_back({"alpha", tag + " i=" + std::to_string(i), alpha[i].value(),
                           exact(free, "C_in=" + std::to_string(i), "I")});
        for (std::size_t s = 0; s < hc.sizes.size(); ++s) {
            const auto spec = oracle::hetero_scenario(hc.sizes, hc.p, hc.beta, s);
            const double o = exact(spec, "G", "I & E");
            out.push_back({"hetero", tag + " s=" + std::to_string(s),
                           subpop::hetero_posterior_odds(model, s).probability.value(), o});
            out.push_back({"hetero_joint", tag + " s=" + std::to_string(s),
                           subpop::hetero_posterior_odds_joint(model, s).probability.value(), o});
        }
        out.push_back({"hetero_marginal", tag, subpop::hetero_posterior_marginal(model).value(),
                       exact(free, "G", "I & E")});
    }
}

struct MixtureCase {
    std::vector<std::size_t> sizes;
    std::vector<std::vector<double>> atoms;
    std::vector<std::vector<double>> weights;
    std::vector<double> beta;
    std::vector<double> eps;
};

// Atoms sit on nodes of the default grid (multiples of 1/4096).
const std::vector<MixtureCase>& mixture_cases() {
    static const std::vector<MixtureCase> c{
        {{3, 2}, {{0.125, 0.5}, {0.25}}, {{0.5, 0.5}, {1.0}}, {0.6, 0.4}, {0.5, 0.5}},
        {{2, 3}, {{0.0625, 0.375}, {0.125, 0.625}}, {{0.3, 0.7}, {0.8, 0.2}}, {0.3, 0.7}, {0.8, 0.2}},
        {{4, 2}, {{0.25}, {0.125, 0.25, 0.75}}, {{1.0}, {0.2, 0.5, 0.3}}, {0.5, 0.5}, {0.25, 0.75}},
        {{2, 2, 2}, {{0.125, 0.25}, {0.375}, {0.5, 0.875}}, {{0.5, 0.5}, {1.0}, {0.9, 0.1}}, {0.2, 0.3, 0.5},
         {0.4, 0.4, 0.2}},
        {{1, 3, 2}, {{0.5, 0.75}, {0.0625, 0.125}, {0.25, 0.5}}, {{0.6, 0.4}, {0.5, 0.5}, {0.1, 0.9}},
         {0.1, 0.6, 0.3}, {0.7, 0.2, 0.1}},
        {{5, 2}, {{0.03125, 0.25}, {0.5}}, {{0.75, 0.25}, {1.0}}, {0.8, 0.2}, {0.9, 0.1}},
        {{3, 3}, {{0.125, 0.375, 0.625}, {0.25, 0.75}}, {{0.2, 0.3, 0.5}, {0.5, 0.5}}, {0.5, 0.5}, {0.6, 0.4}},
    };
    return c;
}

void uncertain_family(std::vector<GridCase>& out) {
    for (const auto& mc : mixture_cases()) {
        const auto model = mixture_model(mc.sizes, mc.atoms, mc.weights, mc.beta, mc.eps);
        std::ostringstream t;
        t << "N=" << list(mc.sizes) << " beta=" << list(mc.beta);
        const std::string tag = t.str();
        for (std::size_t s = 0; s < mc.sizes.size(); ++s) {
            const auto spec = oracle::uncertain_scenario(mc.sizes, mc.atoms, mc.weights, mc.beta, s);
            out.push_back({"uncertain_subpop", tag + " s=" + std::to_string(s),
                           uncertain::uncertain_subpop_posterior(model, s).value(), exact(spec, "G", "I & E")});
        }
        const auto free = oracle::uncertain_scenario(mc.sizes, mc.atoms, mc.weights, mc.beta, std::nullopt, mc.eps);
        const auto member = uncertain::suspect_subpop_posterior(model);
        out.push_back({"membership", tag + " eps=" + list(mc.eps), uncertain::unknown_subpop_posterior(model).value(),
                       exact(free, "G", "I & E")});
        for (std::size_t i = 0; i < mc.sizes.size(); ++i)
            out.push_back({"membership_weight", tag + " i=" + std::to_string(i), member[i].value(),
                           exact(free, "S_in=" + std::to_string(i), "I & E")});
        // Same population seen with point frequencies.
        std::vector<double> p;
        for (std::size_t i = 0; i < mc.sizes.size(); ++i) {
            double m = 0.0;
            for (std::size_t j = 0; j < mc.atoms[i].size(); ++j) m += mc.atoms[i][j] * mc.weights[i][j];
            p.push_back(m);
        }
        const auto pm = point_model(mc.sizes, p, mc.beta, mc.eps);
        const auto pfree = oracle::hetero_scenario(mc.sizes, p, mc.beta, std::nullopt, mc.eps);
        out.push_back({"membership_point", tag, uncertain::unknown_subpop_posterior(pm).value(),
                       exact(pfree, "G", "I & E")});
    }
    // Homogeneous population with an uncertain frequency.
    const std::vector<std::vector<double>> atoms{{0.125, 0.5}, {0.25}, {0.0625, 0.25, 0.75}, {0.375, 0.625}};
    const std::vector<std::vector<double>> weights{{0.5, 0.5}, {1.0}, {0.3, 0.3, 0.4}, {0.9, 0.1}};
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t n : {1, 3, 6, 9}) {
            const auto d = FrequencyDensity::discrete_mixture(atoms[a], weights[a]);
            const auto spec = oracle::uncertain_scenario({n + 1}, {atoms[a]}, {weights[a]}, {1.0}, 0);
            out.push_back({"uncertain", "N=" + std::to_string(n) + " atoms=" + list(atoms[a]),
                           uncertain::uncertain_posterior(n, d).probability.value(), exact(spec, "G", "I & E")});
        }
}

void database_family(std::vector<GridCase>& out) {
    std::mt19937_64 rng(20240601);
    struct Db {
        std::size_t population, n;
        double p;
    };
    const std::vector<Db> dbs{{6, 2, 0.1}, {6, 3, 0.3}, {8, 3, 0.2}, {8, 5, 0.05}, {10, 4, 0.15}, {10, 2, 0.4},
                              {7, 7, 0.2}, {9, 6, 0.25}};
    for (const auto& db : dbs) {
        const auto prior = random_simplex(rng, db.population);
        const auto spec = oracle::database_scenario(db.population, db.n, db.p, prior);
        const std::string tag = "N=" + std::to_string(db.population) + " n=" + std::to_string(db.n) +
                                " p=" + std::to_string(db.p);
        double q = 0.0;
        for (std::size_t i = 0; i < db.n; ++i) q += prior[i];
        for (std::uint64_t k = 1; k <= std::min<std::size_t>(2, db.n); ++k) {
            database::DatabaseSpec ds;
            ds.n = db.n;
            ds.k = k;
            ds.member_alphas.assign(prior.begin(), prior.begin() + static_cast<long>(db.n));
            ds.outside_total = 1.0 - q;
            ds.p = db.p;
            const std::string ev = "I & ED=" + std::to_string(k);
            out.push_back({"database_focused", tag + " k=" + std::to_string(k),
                           database::database_focused(ds).probability.value(), exact(spec, "C_in_D", ev)});
            out.push_back({"individual_focused", tag + " k=" + std::to_string(k),
                           database::individual_focused(ds, 0).probability.value(), exact(spec, "C=0", ev)});
        }
        const auto eff = database::database_effectiveness(db.n, db.p, q);
        out.push_back({"effectiveness", tag, eff.odds.probability.value(), exact(spec, "G", "I & E1")});
        out.push_back({"p_unique_exact", tag, eff.p_unique_exact.value(), exact(spec, "E1", "I")});
    }
}

struct Built {
    ScenarioSpec spec;
    dependence::GroupedDependencySpec closed;
};

// Biased search: sigma[y][x] = P(S = x | C = y), independent Gamma, suspect 0.
Built biased_case(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.05, 0.6);
    std::vector<double> p(m), prior = random_simplex(rng, m);
    for (auto& x : p) x = u(rng);
    oracle::BiasedSuspect bs;
    for (std::size_t y = 0; y < m; ++y) {
        auto row = random_simplex(rng, m);
        for (auto& x : row) x *= 0.9;  // leave mass for S = *
        bs.given.push_back(row);
    }
    Built b;
    b.spec.subpop.assign(m, 0);
    b.spec.criminal_prior = prior;
    b.spec.gamma = oracle::IndependentGamma{p};
    b.spec.suspect = bs;
    double z = 0.0;
    for (std::size_t y = 0; y < m; ++y) z += prior[y] * p[y];
    auto& d = b.closed;
    d.kind = dependence::RatioKind::bias_sigma;
    d.suspect_frequency = p[0];
    d.suspect_prior_given_I = prior[0] * p[0] / z;
    for (std::size_t y = 1; y < m; ++y) {
        dependence::DependencyGroup g;
        g.count = 1;
        g.prior_given_I = prior[y] * p[y] / z;
        g.ratio = bs.given[y][0] / bs.given[0][0];
        g.frequency = p[y];
        d.groups.push_back(g);
    }
    return b;
}

// Correlated traits: explicit joint law of Gamma, suspect fixed at 0.
Built correlated_case(std::mt19937_64& rng, std::size_t m) {
    const std::size_t states = std::size_t{1} << m;
    const auto table = random_simplex(rng, states, 0.01);
    const auto prior = random_simplex(rng, m);
    auto marginal = [&](std::size_t mask) {
        double s = 0.0;
        for (std::size_t g = 0; g < states; ++g)
            if ((g & mask) == mask) s += table[g];
        return s;
    };
    Built b;
    b.spec.subpop.assign(m, 0);
    b.spec.criminal_prior = prior;
    b.spec.gamma = oracle::JointGamma{table};
    std::vector<double> sprior(m, 0.0);
    sprior[0] = 1.0;
    b.spec.suspect = oracle::IndependentSuspect{sprior};
    double z = 0.0;
    for (std::size_t y = 0; y < m; ++y) z += prior[y] * marginal(std::size_t{1} << y);
    const double p0 = marginal(1);
    auto& d = b.closed;
    d.kind = dependence::RatioKind::correlation_c;
    d.suspect_frequency = p0;
    d.suspect_prior_given_I = prior[0] * p0 / z;
    d.suspect_prior_unconditioned = prior[0];
    for (std::size_t y = 1; y < m; ++y) {
        const double py = marginal(std::size_t{1} << y);
        const double both = marginal(1 | (std::size_t{1} << y));
        dependence::DependencyGroup g;
        g.count = 1;
        g.prior_given_I = prior[y] * py / z;
        g.prior_unconditioned = prior[y];
        g.ratio = both / py;
        g.frequency = py;
        g.reverse_ratio = both / p0;
        d.groups.push_back(g);
    }
    return b;
}

double biased_closed(const Built& b) { return dependence::biased_search_odds(b.closed).result.probability.value(); }

double correlated_closed(const Built& b, dependence::Conditioning c) {
    return dependence::correlated_odds(b.closed, c).result.probability.value();
}

void dependence_family(std::vector<GridCase>& out) {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 16; ++rep) {
        const auto b = biased_case(rng, 3 + rep % 4);
        const std::string tag = "M=" + std::to_string(3 + rep % 4) + " rep=" + std::to_string(rep);
        out.push_back({"biased_search", tag, biased_closed(b), exact(b.spec, "C=0", "S=0 & I & E")});
    }
    for (int rep = 0; rep < 16; ++rep) {
        const auto b = correlated_case(rng, 3 + rep % 3);
        const std::string tag = "M=" + std::to_string(3 + rep % 3) + " rep=" + std::to_string(rep);
        const double o = exact(b.spec, "G", "I & E");
        out.push_back({"correlated_on_I", tag, correlated_closed(b, dependence::Conditioning::on_I), o});
        out.push_back({"correlated_unconditioned", tag, correlated_closed(b, dependence::Conditioning::unconditioned),
                       o});
        // The biased search with the same odds has sigma ratio c_{0,y}/p_0.
        auto bias = b.closed;
        bias.kind = dependence::RatioKind::bias_sigma;
        for (auto& g : bias.groups) {
            g.ratio /= bias.suspect_frequency;
            g.reverse_ratio.reset();
        }
        const auto eqv = dependence::bias_correlation_equivalent(bias);
        out.push_back({"bias_to_correlation", tag,
                       dependence::correlated_odds(eqv, dependence::Conditioning::on_I).result.probability.value(), o});
    }
}

}  // namespace

std::vector<GridCase> exact_grid() {
    std::vector<GridCase> out;
    classical_family(out);
    hetero_family(out);
    uncertain_family(out);
    database_family(out);
    dependence_family(out);
    return out;
}

std::vector<McCase> mc_cases() {
    std::vector<McCase> out;
    out.push_back({"classical N=9 p=0.2", oracle::classical_scenario(9, 0.2), "G", "I & E",
                   classical::classical_posterior(9, 0.2).probability.value()});
    out.push_back({"yellin N=9 p=0.2", oracle::yellin_scenario(9, 0.2), "G", "I & E",
                   classical::yellin_posterior(9, 0.2).value()});
    {
        const auto& hc = hetero_cases()[4];
        out.push_back({"hetero s=2", oracle::hetero_scenario(hc.sizes, hc.p, hc.beta, 2), "G", "I & E",
                       subpop::hetero_posterior_odds(point_model(hc.sizes, hc.p, hc.beta), 2).probability.value()});
    }
    {
        const auto& mc = mixture_cases()[3];
        const auto model = mixture_model(mc.sizes, mc.atoms, mc.weights, mc.beta, mc.eps);
        out.push_back({"uncertain s=1", oracle::uncertain_scenario(mc.sizes, mc.atoms, mc.weights, mc.beta, 1), "G",
                       "I & E", uncertain::uncertain_subpop_posterior(model, 1).value()});
        out.push_back({"membership",
                       oracle::uncertain_scenario(mc.sizes, mc.atoms, mc.weights, mc.beta, std::nullopt, mc.eps), "G",
                       "I & E", uncertain::unknown_subpop_posterior(model).value()});
    }
    {
        const std::vector<double> prior{0.3, 0.2, 0.1, 0.1, 0.1, 0.1, 0.05, 0.05};
        const auto e = database::database_effectiveness(3, 0.2, 0.6);
        out.push_back({"database unique match", oracle::database_scenario(8, 3, 0.2, prior), "G", "I & E1",
                       e.odds.probability.value()});
    }
    std::mt19937_64 rng(5);
    {
        const auto b = biased_case(rng, 5);
        out.push_back({"biased search", b.spec, "C=0", "S=0 & I & E", biased_closed(b)});
    }
    {
        const auto b = correlated_case(rng, 5);
        out.push_back({"correlated traits", b.spec, "G", "I & E",
                       correlated_closed(b, dependence::Conditioning::on_I)});
    }
    return out;
}

}  // namespace suite
