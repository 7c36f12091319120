#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>

#include "capi.hpp"

namespace cli {

namespace {

struct Family {
    const char* subcommand;
    std::vector<std::string> variants;
};

const std::vector<Family>& families() {
    static const std::vector<Family> f{
        {"classical", {"classical"}},
        {"yellin", {"yellin"}},
        {"depend", {"depend"}},
        {"hetero", {"hetero"}},
        {"uncertain", {"uncertain", "uncertain_subpop"}},
        {"membership", {"membership"}},
        {"database", {"database_focused", "individual_focused", "database_effectiveness"}},
        {"growth", {"growth"}},
        {"oracle", {"oracle"}},
    };
    return f;
}

// Computation status where a validation code still means bad input.
void compute(island_status st, const std::string& path = "parameters") {
    if (st == ISLAND_E_VALIDATION) invalid(path, describe(st));
    check(st);
}

int resolution_of(const Object& o, const Options& opt) {
    if (const auto r = o.find("resolution")) {
        const long v = r->integer();
        if (v < 5 || v % 2 == 0) invalid(r->path(), "resolution must be odd and at least 5");
        return static_cast<int>(v);
    }
    return opt.resolution;
}

island_density_stage stage_of(const Node& n) {
    const std::string s = n.choice({"prior_to_crime", "prior_to_suspect", "post_match"});
    if (s == "prior_to_crime") return ISLAND_STAGE_PRIOR_TO_CRIME;
    if (s == "prior_to_suspect") return ISLAND_STAGE_PRIOR_TO_SUSPECT;
    return ISLAND_STAGE_POST_MATCH;
}

// {"beta": {"a", "b"}} | {"mean", "sd"} | {"mean", "sd_over_mean"} |
// {"mixture": {"atoms", "weights"}} | {"tabulated": {"values", "stage", "n"}}
Density read_density(const Node& node, const Options& opt) {
    const Object o(node, {"beta", "mean", "sd", "sd_over_mean", "mixture", "tabulated", "resolution"});
    island_density* raw = nullptr;
    switch (o.one_of({"beta", "mean", "mixture", "tabulated"})) {
        case 0: {
            const Object b(o.at("beta"), {"a", "b"});
            check_input(island_density_beta(b.number("a"), b.number("b"), &raw), o.field("beta"));
            break;
        }
        case 1: {
            const double mean = o.number("mean");
            const double sd = o.one_of({"sd", "sd_over_mean"}) == 0 ? o.number("sd") : o.number("sd_over_mean") * mean;
            check_input(island_density_beta_mean_sd(mean, sd, &raw), o.path());
            break;
        }
        case 2: {
            const Object m(o.at("mixture"), {"atoms", "weights"});
            const auto atoms = m.at("atoms").numbers();
            const auto weights = m.at("weights").numbers();
            if (atoms.size() != weights.size()) invalid(m.field("weights"), "needs one weight per atom");
            check_input(island_density_mixture(atoms.data(), weights.data(), atoms.size(), resolution_of(o, opt), &raw),
                        o.field("mixture"));
            break;
        }
        default: {
            const Object t(o.at("tabulated"), {"values", "stage", "n"});
            const auto values = t.at("values").numbers();
            const auto stage = stage_of(t.at("stage"));
            const auto n = t.find("n");
            check_input(island_density_tabulated(values.data(), values.size(), stage, n ? 1 : 0, n ? n->count() : 0,
                                                 &raw),
                        o.field("tabulated"));
            break;
        }
    }
    return Density(raw);
}

struct PopulationInput {
    Population pop;
    std::vector<std::uint64_t> sizes;
};

// parameters.subpopulations: [{size, frequency, beta[, epsilon]}]
PopulationInput read_population(const Object& params, bool with_epsilon, const Options& opt) {
    PopulationInput in;
    island_population* raw = nullptr;
    check(island_population_create(&raw));
    in.pop.reset(raw);
    const Node list = params.at("subpopulations");
    const auto items = list.elements();
    if (items.empty()) invalid(list.path(), "at least one subpopulation is required");
    for (const auto& item : items) {
        const Object sp = with_epsilon ? Object(item, {"size", "frequency", "beta", "epsilon"})
                                       : Object(item, {"size", "frequency", "beta"});
        const std::uint64_t size = sp.count("size");
        const double beta = sp.number("beta");
        const double eps = with_epsilon ? sp.number("epsilon") : -1.0;
        if (with_epsilon && eps < 0.0) invalid(sp.field("epsilon"), "must be non-negative");
        const Node f = sp.at("frequency");
        if (f.is_number()) {
            check_input(island_population_add_point(in.pop.get(), size, f.number(), beta, eps), sp.path());
        } else {
            const Density d = read_density(f, opt);
            check_input(island_population_add_density(in.pop.get(), size, d.get(), beta, eps), sp.path());
        }
        in.sizes.push_back(size);
    }
    check_input(island_population_validate(in.pop.get()), list.path());
    return in;
}

std::size_t read_index(const Object& o, const char* key, std::size_t count) {
    const Node n = o.at(key);
    const long v = n.integer();
    if (v < 0 || static_cast<std::size_t>(v) >= count)
        invalid(n.path(), "index " + std::to_string(v) + " out of range (0.." + std::to_string(count - 1) + ")");
    return static_cast<std::size_t>(v);
}

std::vector<island_lr_convention> conventions(const Document& doc, std::vector<island_lr_convention> defaults) {
    if (!doc.has_conventions) return defaults;
    std::vector<island_lr_convention> out;
    for (const auto& name : doc.conventions) {
        island_lr_convention c;
        check(island_convention_parse(name.c_str(), &c));
        out.push_back(c);
    }
    return out;
}

template <typename Fn>
void report_lrs(Report& rep, const std::vector<island_lr_convention>& convs, Fn&& eval) {
    for (auto c : convs) {
        double v = 0.0;
        const island_status st = eval(c, &v);
        if (st == ISLAND_OK) rep.lr("reported_lr", v, c);
        else if (st == ISLAND_E_CONVENTION_MISMATCH) rep.lr_unavailable("reported_lr", island_convention_name(c), island_last_error());
        else check(st);
    }
}

// Homogeneous population as a one-element population of n+1 individuals.
Population homogeneous(std::uint64_t n, const island_density* d, double p) {
    island_population* raw = nullptr;
    check(island_population_create(&raw));
    Population pop(raw);
    if (d) check(island_population_add_density(raw, n + 1, d, 1.0, -1.0));
    else check(island_population_add_point(raw, n + 1, p, 1.0, -1.0));
    return pop;
}

void run_classical(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"n", "p"});
    const std::uint64_t n = o.count("n");
    const double p = o.number("p");
    island_odds_result r;
    compute(island_classical_posterior(n, p, &r));
    rep.title("classical island problem, N = " + std::to_string(n));
    rep.odds_result("", r);
    const Population pop = homogeneous(n, nullptr, p);
    report_lrs(rep, conventions(doc, {}), [&](island_lr_convention c, double* v) {
        return island_hetero_lr(pop.get(), 0, c, v);
    });
    island_bearers* b = nullptr;
    compute(island_bearers_create(n, p, ISLAND_BEARERS_GIVEN_I, &b));
    double mean = 0.0;
    const island_status st = island_bearers_mean(b, &mean);
    island_bearers_destroy(b);
    compute(st);
    rep.add("expected_bearers_given_I", mean, Kind::number);
}

void run_yellin(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"n", "p"});
    const std::uint64_t n = o.count("n");
    const double p = o.number("p");
    double y = 0.0;
    compute(island_yellin_posterior(n, p, &y));
    island_odds_result r;
    compute(island_classical_posterior(n, p, &r));
    rep.title("search until the first trait bearer, N = " + std::to_string(n));
    rep.add("probability", y, Kind::probability, "suspect found by sequential search");
    rep.add("classical_probability", r.probability, Kind::probability, "suspect independent of the trait");
}

void run_uncertain(const Document& doc, const Options& opt, Report& rep) {
    const Object o(doc.parameters(), {"n", "frequency"});
    const std::uint64_t n = o.count("n");
    const Density d = read_density(o.at("frequency"), opt);
    island_moments m;
    compute(island_density_moments(d.get(), 1, n, &m));
    island_odds_result r;
    compute(island_uncertain_posterior(n, d.get(), &r));
    rep.title("island problem with uncertain frequency, N = " + std::to_string(n));
    rep.add("p", m.p, Kind::number, "mean frequency before the crime");
    rep.add("sigma", std::sqrt(m.sigma2), Kind::number);
    rep.add("p_prime", m.p_prime, Kind::number, "mean frequency given the criminal's trait");
    rep.add("p_double_prime", m.p_double_prime, Kind::number, "mean frequency given both matches");
    rep.odds_result("", r);
    const Population pop = homogeneous(n, d.get(), 0.0);
    report_lrs(rep, conventions(doc, {}), [&](island_lr_convention c, double* v) {
        return island_uncertain_subpop_lr(pop.get(), 0, c, ISLAND_LARGE_N_JOINT, v);
    });
}

void run_uncertain_subpop(const Document& doc, const Options& opt, Report& rep) {
    const Object o(doc.parameters(), {"subpopulations", "suspect_subpop", "large_n", "large_n_base"});
    const auto in = read_population(o, false, opt);
    const std::size_t s = read_index(o, "suspect_subpop", in.sizes.size());
    const bool large_n = o.has("large_n") && o.at("large_n").boolean();
    island_large_n_base base = ISLAND_LARGE_N_JOINT;
    if (const auto b = o.find("large_n_base")) base = b->choice({"joint", "conditional"}) == "joint" ? ISLAND_LARGE_N_JOINT : ISLAND_LARGE_N_CONDITIONAL;
    double post = 0.0;
    compute(island_uncertain_subpop_posterior(in.pop.get(), s, large_n ? 1 : 0, &post));
    rep.title("subpopulations with uncertain frequencies, suspect in subpopulation " + std::to_string(s));
    rep.add("probability", post, Kind::probability, large_n ? "large-N approximation" : "exact");
    rep.add("posterior_odds", post < 1.0 ? post / (1.0 - post) : INFINITY, Kind::odds);
    report_lrs(rep,
               conventions(doc, {ISLAND_LR_JOINT_I_AND_E, ISLAND_LR_CONDITIONAL_ON_I, ISLAND_LR_LARGE_N}),
               [&](island_lr_convention c, double* v) {
                   return island_uncertain_subpop_lr(in.pop.get(), s, c, base, v);
               });
}

void run_hetero(const Document& doc, const Options& opt, Report& rep) {
    const Object o(doc.parameters(), {"subpopulations", "suspect_subpop"});
    const auto in = read_population(o, false, opt);
    const std::size_t s = read_index(o, "suspect_subpop", in.sizes.size());
    std::vector<double> alpha(in.sizes.size());
    size_t len = 0;
    compute(island_alpha_from_beta(in.pop.get(), alpha.data(), alpha.size(), &len));
    island_odds_result cond, joint;
    compute(island_hetero_posterior(in.pop.get(), s, &cond));
    compute(island_hetero_posterior_joint(in.pop.get(), s, &joint));
    rep.title("heterogeneous population, suspect in subpopulation " + std::to_string(s));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        rep.add("alpha[" + std::to_string(i) + "]", alpha[i], Kind::probability, "P(C in subpopulation | I)");
    rep.odds_result("conditional.", cond);
    rep.odds_result("joint.", joint);
    report_lrs(rep,
               conventions(doc, {ISLAND_LR_CONDITIONAL_ON_I, ISLAND_LR_JOINT_I_AND_E, ISLAND_LR_LARGE_N}),
               [&](island_lr_convention c, double* v) { return island_hetero_lr(in.pop.get(), s, c, v); });
    double marginal = 0.0;
    compute(island_hetero_marginal(in.pop.get(), ISLAND_WEIGHTS_EXACT, &marginal));
    rep.add("marginal_probability", marginal, Kind::probability, "suspect drawn uniformly from the population");
}

void run_membership(const Document& doc, const Options& opt, Report& rep) {
    const Object o(doc.parameters(), {"subpopulations"});
    const auto in = read_population(o, true, opt);
    const std::size_t m = in.sizes.size();
    std::vector<double> member(m);
    size_t len = 0;
    compute(island_suspect_subpop_posterior(in.pop.get(), member.data(), m, &len));
    double p = 0.0, naive = 0.0;
    compute(island_unknown_subpop_posterior(in.pop.get(), &p));
    compute(island_naive_homogeneous_posterior(in.pop.get(), &naive));
    rep.title("suspect's subpopulation unknown");
    for (std::size_t i = 0; i < m; ++i) {
        double post = 0.0;
        compute(island_uncertain_subpop_posterior(in.pop.get(), i, 0, &post));
        rep.add("P(S in X" + std::to_string(i) + " | I,E)", member[i], Kind::probability);
        rep.add("P(G | I,E, S in X" + std::to_string(i) + ")", post, Kind::probability);
    }
    rep.add("probability", p, Kind::probability);
    rep.add("posterior_odds", p < 1.0 ? p / (1.0 - p) : INFINITY, Kind::odds);
    rep.add("naive_probability", naive, Kind::probability, "first subpopulation's frequency for everyone");
}

void run_depend(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"kind", "suspect", "groups", "conditioning", "convert"});
    const bool bias = o.at("kind").choice({"bias", "correlation"}) == "bias";
    const Object sus(o.at("suspect"), {"frequency", "prior_given_I", "prior_unconditioned"});
    island_dependence* raw = nullptr;
    check_input(island_dependence_create(bias ? ISLAND_RATIO_BIAS : ISLAND_RATIO_CORRELATION, sus.number("frequency"),
                                         sus.number("prior_given_I"), &raw),
                sus.path());
    Dependence dep(raw);
    if (const auto u = sus.find("prior_unconditioned"))
        check_input(island_dependence_set_suspect_unconditioned(raw, u->number()), u->path());
    const auto groups = o.at("groups").elements();
    for (const auto& g : groups) {
        const Object go(g, {"count", "prior_given_I", "ratio", "frequency", "prior_unconditioned", "reverse_ratio"});
        size_t ix = 0;
        check_input(island_dependence_add_group(raw, go.count("count"), go.number("prior_given_I"), go.number("ratio"), &ix),
                    go.path());
        if (const auto v = go.find("frequency")) check_input(island_dependence_set_group_frequency(raw, ix, v->number()), v->path());
        if (const auto v = go.find("prior_unconditioned"))
            check_input(island_dependence_set_group_unconditioned(raw, ix, v->number()), v->path());
        if (const auto v = go.find("reverse_ratio"))
            check_input(island_dependence_set_group_reverse_ratio(raw, ix, v->number()), v->path());
    }
    island_conditioning cond = ISLAND_ON_I;
    if (const auto c = o.find("conditioning"))
        cond = c->choice({"on_I", "unconditioned"}) == "on_I" ? ISLAND_ON_I : ISLAND_UNCONDITIONED;

    auto emit = [&](const island_dependence* d, bool as_bias, const std::string& prefix) {
        island_dependence_result r;
        if (as_bias) compute(island_biased_search_odds(d, &r));
        else compute(island_correlated_odds(d, cond, &r));
        rep.odds_result(prefix, r.result);
        rep.add(prefix + "effective_lr", r.effective_lr, Kind::ratio, "posterior odds over prior odds");
        if (!std::isnan(r.guilt_given_selection))
            rep.add(prefix + "P(C=s | S=s, I)", r.guilt_given_selection, Kind::probability);
    };
    rep.title(bias ? "biased search" : "correlated traits");
    emit(dep.get(), bias, "");
    if (o.has("convert") && o.at("convert").boolean()) {
        island_dependence* eq = nullptr;
        compute(island_bias_correlation_equivalent(dep.get(), &eq));
        Dependence conv(eq);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            double ratio = 0.0;
            check(island_dependence_group_ratio(eq, i, &ratio));
            rep.add("converted.group[" + std::to_string(i) + "].ratio", ratio, Kind::number,
                    bias ? "correlation ratio c" : "bias ratio");
        }
        emit(eq, !bias, "converted.");
    }
}

struct DbInput {
    std::uint64_t n = 0, k = 0;
    std::vector<double> alphas;
    double uniform_total = 0.0, outside = 0.0, p = 0.0;
};

DbInput read_db(const Object& o) {
    DbInput d;
    d.n = o.count("n");
    d.k = o.count("k");
    if (o.one_of({"alphas", "uniform_total"}) == 0) {
        d.alphas = o.at("alphas").numbers();
        if (d.alphas.size() != d.n) invalid(o.field("alphas"), "needs one prior per database member (n)");
    } else {
        d.uniform_total = o.number("uniform_total");
    }
    d.outside = o.number("outside_total");
    d.p = o.number("p");
    return d;
}

void run_database_focused(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"n", "k", "alphas", "uniform_total", "outside_total", "p"});
    const DbInput d = read_db(o);
    island_odds_result r;
    compute(island_database_focused(d.n, d.k, d.alphas.empty() ? nullptr : d.alphas.data(), d.uniform_total,
                                    d.outside, d.p, &r));
    rep.title("database search, " + std::to_string(d.k) + " of " + std::to_string(d.n) + " members match");
    rep.odds_result("", r);
}

void run_individual_focused(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"n", "k", "alphas", "uniform_total", "outside_total", "p", "target"});
    const DbInput d = read_db(o);
    const std::uint64_t target = o.count("target");
    island_odds_result r;
    compute(island_individual_focused(d.n, d.k, d.alphas.empty() ? nullptr : d.alphas.data(), d.uniform_total,
                                      d.outside, d.p, target, &r));
    rep.title("database search, matched member " + std::to_string(target));
    rep.odds_result("", r);
}

void run_effectiveness(const Document& doc, const Options&, Report& rep) {
    const Object o(doc.parameters(), {"n", "p", "q", "kmax"});
    const std::uint64_t n = o.count("n");
    const double p = o.number("p"), q = o.number("q");
    island_effectiveness e;
    compute(island_database_effectiveness(n, p, q, &e));
    double coinc = 0.0;
    compute(island_double_match_coincidence(n, p, q, &coinc));
    rep.title("database effectiveness, n = " + std::to_string(n));
    rep.odds_result("", e.odds);
    rep.add("P(E1)", e.p_unique, Kind::probability, "one match");
    rep.add("P(E1) exact", e.p_unique_exact, Kind::probability);
    rep.add("P(both coincidental | two matches)", coinc, Kind::probability);
    if (const auto km = o.find("kmax")) {
        const std::uint64_t kmax = km->count();
        if (kmax > 1000) invalid(km->path(), "at most 1000");
        std::vector<double> dist(kmax + 1);
        size_t len = 0;
        compute(island_match_count_distribution(n, p, q, kmax, dist.data(), dist.size(), &len));
        for (std::size_t k = 0; k < len; ++k) rep.add("P(K=" + std::to_string(k) + ")", dist[k], Kind::probability);
    }
}

std::vector<std::uint64_t> growth_sizes(const Object& o, std::uint64_t population) {
    if (o.one_of({"sizes", "grid"}) == 0) return o.at("sizes").counts();
    const Object g(o.at("grid"), {"from", "to", "points"});
    const std::uint64_t from = g.count("from"), to = g.count("to"), points = g.count("points");
    if (points < 2) invalid(g.field("points"), "at least 2");
    if (from < 1 || to < from || to > population) invalid(g.path(), "need 1 <= from <= to <= population");
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t i = 0; i < points; ++i) {
        const double x = static_cast<double>(from) + static_cast<double>(to - from) * static_cast<double>(i) /
                                                         static_cast<double>(points - 1);
        const auto n = static_cast<std::uint64_t>(std::llround(x));
        if (sizes.empty() || n != sizes.back()) sizes.push_back(n);
    }
    return sizes;
}

void run_growth(const Document& doc, const Options& opt, std::ostream& out, const std::string& format) {
    const Object o(doc.parameters(), {"population", "p", "inclusion", "sizes", "grid"});
    const std::uint64_t population = o.count("population");
    const double p = o.number("p");
    const auto inc = o.at("inclusion").choice({"random_sample", "sqrt_weighted"}) == "random_sample"
                         ? ISLAND_INCLUSION_RANDOM_SAMPLE
                         : ISLAND_INCLUSION_SQRT_WEIGHTED;
    const auto sizes = growth_sizes(o, population);
    std::vector<double> odds(sizes.size()), uniq(sizes.size());
    compute(island_growth_curve(population, p, inc, sizes.data(), sizes.size(), odds.data(), uniq.data()));
    (void)opt;
    if (format == "csv") {
        out << "n,odds,p_unique\n";
        for (std::size_t i = 0; i < sizes.size(); ++i)
            out << sizes[i] << ',' << exact(odds[i]) << ',' << exact(uniq[i]) << '\n';
        return;
    }
    out << "database growth, N = " << population << "\n";
    out << "  " << std::left << std::setw(14) << "n" << std::setw(14) << "odds" << "p_unique\n";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        out << "  " << std::setw(14) << sizes[i] << std::setw(14) << format_value(odds[i], Kind::odds)
            << format_value(uniq[i], Kind::probability) << '\n';
}

// Oracle scenarios -----------------------------------------------------------

std::vector<std::size_t> to_size(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

Scenario read_custom(const Object& sc) {
    const auto prior = sc.at("criminal_prior").numbers();
    std::vector<std::size_t> subpop;
    if (const auto s = sc.find("subpop")) subpop = to_size(s->counts());
    if (!subpop.empty() && subpop.size() != prior.size()) invalid(sc.field("subpop"), "one entry per individual");
    island_scenario* raw = nullptr;
    check_input(island_scenario_create(prior.size(), subpop.empty() ? nullptr : subpop.data(), prior.data(), &raw),
                sc.path());
    Scenario out(raw);
    const Object g(sc.at("gamma"), {"independent", "mixture", "joint"});
    switch (g.one_of({"independent", "mixture", "joint"})) {
        case 0: {
            const auto p = g.at("independent").numbers();
            if (p.size() != prior.size()) invalid(g.field("independent"), "one frequency per individual");
            check_input(island_scenario_gamma_independent(raw, p.data()), g.field("independent"));
            break;
        }
        case 1: {
            const Object m(g.at("mixture"), {"atoms", "weights"});
            std::vector<size_t> counts;
            std::vector<double> atoms, weights;
            const auto a = m.at("atoms").elements(), w = m.at("weights").elements();
            if (a.size() != w.size()) invalid(m.field("weights"), "one list per subpopulation");
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto av = a[i].numbers(), wv = w[i].numbers();
                if (av.size() != wv.size()) invalid(w[i].path(), "one weight per atom");
                counts.push_back(av.size());
                atoms.insert(atoms.end(), av.begin(), av.end());
                weights.insert(weights.end(), wv.begin(), wv.end());
            }
            check_input(island_scenario_gamma_mixture(raw, counts.size(), counts.data(), atoms.data(), weights.data()),
                        g.field("mixture"));
            break;
        }
        default: {
            const auto t = g.at("joint").numbers();
            check_input(island_scenario_gamma_joint(raw, t.data(), t.size()), g.field("joint"));
            break;
        }
    }
    const Node sn = sc.at("suspect");
    if (sn.is_string()) {
        if (sn.choice({"sequential", "database"}) == "sequential") check(island_scenario_suspect_sequential(raw));
        else check(island_scenario_suspect_database(raw));
    } else {
        const Object s(sn, {"prior", "biased"});
        if (s.one_of({"prior", "biased"}) == 0) {
            const auto p = s.at("prior").numbers();
            if (p.size() != prior.size()) invalid(s.field("prior"), "one entry per individual");
            check_input(island_scenario_suspect_prior(raw, p.data()), s.field("prior"));
        } else {
            std::vector<double> flat;
            const auto rows = s.at("biased").elements();
            if (rows.size() != prior.size()) invalid(s.field("biased"), "one row per individual");
            for (const auto& r : rows) {
                const auto v = r.numbers();
                if (v.size() != prior.size()) invalid(r.path(), "one entry per individual");
                flat.insert(flat.end(), v.begin(), v.end());
            }
            check_input(island_scenario_suspect_biased(raw, flat.data()), s.field("biased"));
        }
    }
    if (const auto d = sc.find("database")) {
        const auto members = to_size(d->counts());
        check_input(island_scenario_database_members(raw, members.data(), members.size()), d->path());
    }
    return out;
}

Scenario read_scenario(const Node& node) {
    const Object probe(node, {"builder", "n", "p", "sizes", "beta", "suspect_subpop", "epsilon", "atoms", "weights",
                              "population", "criminal_prior", "subpop", "gamma", "suspect", "database"});
    const std::string b = probe.at("builder").choice({"classical", "yellin", "hetero", "uncertain", "database", "custom"});
    island_scenario* raw = nullptr;
    if (b == "classical" || b == "yellin") {
        const Object o(node, {"builder", "n", "p"});
        const auto st = b == "classical" ? island_scenario_classical(o.count("n"), o.number("p"), &raw)
                                         : island_scenario_yellin(o.count("n"), o.number("p"), &raw);
        check_input(st, o.path());
        return Scenario(raw);
    }
    if (b == "hetero" || b == "uncertain") {
        const Object o = b == "hetero" ? Object(node, {"builder", "sizes", "p", "beta", "suspect_subpop", "epsilon"})
                                       : Object(node, {"builder", "sizes", "atoms", "weights", "beta", "suspect_subpop",
                                                       "epsilon"});
        const auto sizes = o.at("sizes").counts();
        const auto beta = o.at("beta").numbers();
        if (beta.size() != sizes.size()) invalid(o.field("beta"), "one prior per subpopulation");
        long suspect = -1;
        std::vector<double> eps;
        if (const auto s = o.find("suspect_subpop")) suspect = s->integer();
        if (const auto e = o.find("epsilon")) eps = e->numbers();
        if (suspect < 0 && eps.empty()) invalid(o.path(), "suspect_subpop or epsilon is required");
        if (!eps.empty() && eps.size() != sizes.size()) invalid(o.field("epsilon"), "one prior per subpopulation");
        if (b == "hetero") {
            const auto p = o.at("p").numbers();
            if (p.size() != sizes.size()) invalid(o.field("p"), "one frequency per subpopulation");
            check_input(island_scenario_hetero(sizes.data(), p.data(), beta.data(), sizes.size(), suspect,
                                               eps.empty() ? nullptr : eps.data(), &raw),
                        o.path());
        } else {
            std::vector<size_t> counts;
            std::vector<double> atoms, weights;
            const auto a = o.at("atoms").elements(), w = o.at("weights").elements();
            if (a.size() != sizes.size() || w.size() != sizes.size())
                invalid(o.field("atoms"), "one atom list and one weight list per subpopulation");
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto av = a[i].numbers(), wv = w[i].numbers();
                if (av.size() != wv.size()) invalid(w[i].path(), "one weight per atom");
                counts.push_back(av.size());
                atoms.insert(atoms.end(), av.begin(), av.end());
                weights.insert(weights.end(), wv.begin(), wv.end());
            }
            check_input(island_scenario_uncertain(sizes.data(), counts.data(), atoms.data(), weights.data(),
                                                  beta.data(), sizes.size(), suspect,
                                                  eps.empty() ? nullptr : eps.data(), &raw),
                        o.path());
        }
        return Scenario(raw);
    }
    if (b == "database") {
        const Object o(node, {"builder", "population", "n", "p", "criminal_prior"});
        std::vector<double> prior;
        if (const auto c = o.find("criminal_prior")) prior = c->numbers();
        const std::uint64_t population = o.count("population");
        if (!prior.empty() && prior.size() != population) invalid(o.field("criminal_prior"), "one entry per individual");
        check_input(island_scenario_database(population, o.count("n"), o.number("p"),
                                             prior.empty() ? nullptr : prior.data(), &raw),
                    o.path());
        return Scenario(raw);
    }
    const Object o(node, {"builder", "criminal_prior", "subpop", "gamma", "suspect", "database"});
    return read_custom(o);
}

void run_oracle(const Document& doc, const Options& opt, Report& rep) {
    const Object o(doc.parameters(), {"scenario", "event", "given", "method", "trials", "seed"});
    const Scenario sc = read_scenario(o.at("scenario"));
    const std::string event = o.string("event");
    const std::string given = o.has("given") ? o.string("given") : "";
    std::string method = opt.method;
    if (method.empty() && o.has("method")) method = o.at("method").choice({"exact", "mc"});
    if (method.empty()) method = "exact";
    island_oracle_estimate e;
    island_status st;
    if (method == "exact") {
        st = island_oracle_exact(sc.get(), event.c_str(), given.c_str(), &e);
    } else {
        std::optional<std::uint64_t> seed = opt.seed, trials = opt.trials;
        if (!seed && o.has("seed")) seed = o.count("seed");
        if (!trials && o.has("trials")) trials = o.count("trials");
        if (!seed) invalid("--seed", "Monte-Carlo runs need an explicit seed");
        if (!trials) invalid("--trials", "Monte-Carlo runs need a trial count");
        st = island_oracle_mc(sc.get(), event.c_str(), given.c_str(), *trials, *seed, opt.threads, &e);
    }
    if (st == ISLAND_E_VALIDATION) invalid("parameters.event/given", describe(st));
    check(st);
    rep.title("oracle P(" + event + (given.empty() ? "" : " | " + given) + ")");
    rep.add("value", e.value, Kind::probability, method == "exact" ? "exact enumeration" : "rejection sampling");
    if (method == "exact") {
        rep.add("total_mass", e.total_mass, Kind::number);
    } else {
        rep.add("std_error", e.std_error, Kind::number);
        rep.add("trials", static_cast<double>(e.trials), Kind::count);
        rep.add("accepted", static_cast<double>(e.accepted), Kind::count);
        rep.add("seed", static_cast<double>(e.seed), Kind::count);
    }
}

}  // namespace

std::vector<std::string> variants_of(const std::string& subcommand) {
    std::vector<std::string> all;
    for (const auto& f : families()) {
        if (subcommand == f.subcommand) return f.variants;
        all.insert(all.end(), f.variants.begin(), f.variants.end());
    }
    return all;
}

void execute(const Document& doc, const Options& opt, std::ostream& out) {
    const std::string format = opt.format.empty() ? doc.format : opt.format;
    if (doc.variant == "growth") {
        run_growth(doc, opt, out, format);
        return;
    }
    using Fn = void (*)(const Document&, const Options&, Report&);
    static const std::map<std::string, Fn> table{
        {"classical", run_classical},
        {"yellin", run_yellin},
        {"uncertain", run_uncertain},
        {"uncertain_subpop", run_uncertain_subpop},
        {"hetero", run_hetero},
        {"membership", run_membership},
        {"depend", run_depend},
        {"database_focused", run_database_focused},
        {"individual_focused", run_individual_focused},
        {"database_effectiveness", run_effectiveness},
        {"oracle", run_oracle},
    };
    const auto it = table.find(doc.variant);
    if (it == table.end()) invalid("variant", "unknown variant \"" + doc.variant + "\"");
    Report rep;
    it->second(doc, opt, rep);
    rep.write(out, format);
}

}  // namespace cli
