#include "island/island.h"

#include <cmath>
#include <limits>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "island/classical.hpp"
#include "island/core.hpp"
#include "island/database.hpp"
#include "island/density.hpp"
#include "island/dependence.hpp"
#include "island/oracle.hpp"
#include "island/population.hpp"
#include "island/quadrature.hpp"
#include "island/subpop.hpp"
#include "island/uncertain.hpp"

using namespace island;

struct island_density {
    FrequencyDensity d;
};

struct island_population {
    std::vector<Subpopulation> subpops;
    PopulationModel model() const { return PopulationModel(subpops); }
};

struct island_dependence {
    dependence::GroupedDependencySpec spec;
};

struct island_bearers {
    classical::BearerDistribution b;
};

struct island_scenario {
    oracle::ScenarioSpec spec;
};

namespace {

thread_local std::string g_last_error;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NullArgument {};

template <typename... Ptrs>
void need(Ptrs... ptrs) {
    if (((ptrs == nullptr) || ...)) throw NullArgument{};
}

struct BufferTooSmall {};

// A null argument is reported with its own status rather than as internal.
template <typename Fn>
island_status api(Fn&& fn) noexcept {
    island_status st = ISLAND_OK;
    try {
        fn();
    } catch (const NullArgument&) {
        g_last_error = "null argument";
        st = ISLAND_E_NULL_ARGUMENT;
    } catch (const BufferTooSmall&) {
        st = ISLAND_E_BUFFER_TOO_SMALL;
    } catch (const Error& e) {
        g_last_error = e.what();
        st = static_cast<island_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        st = ISLAND_E_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        st = ISLAND_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        st = ISLAND_E_INTERNAL;
    }
    return st;
}

void copy_out(const std::vector<double>& v, double* out, size_t cap, size_t* len) {
    need(len);
    *len = v.size();
    if (cap < v.size()) {
        g_last_error = "buffer holds " + std::to_string(cap) + " values, " + std::to_string(v.size()) + " needed";
        throw BufferTooSmall{};
    }
    if (!v.empty()) need(out);
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
}

void fill(const OddsResult& r, island_odds_result* out) {
    out->odds = r.odds.value();
    out->probability = r.probability.value();
    out->prior_odds = r.prior_odds.value();
    out->lr = r.lr.value;
    out->convention = static_cast<island_lr_convention>(static_cast<int>(r.lr.convention));
    out->correction = r.correction;
    out->degenerate = r.degenerate ? 1 : 0;
}

LrConvention convention_of(island_lr_convention c) {
    if (c < ISLAND_LR_CONDITIONAL_ON_I || c > ISLAND_LR_CONSERVATIVE)
        fail(ErrorCode::validation, "unknown likelihood-ratio convention " + std::to_string(static_cast<int>(c)));
    return static_cast<LrConvention>(static_cast<int>(c));
}

std::optional<Probability> epsilon_of(double eps) {
    if (eps < 0.0) return std::nullopt;
    return Probability(eps);
}

void fill(const dependence::DependenceResult& r, island_dependence_result* out) {
    fill(r.result, &out->result);
    out->effective_lr = r.effective_lr;
    out->guilt_given_selection = r.guilt_given_selection ? *r.guilt_given_selection : kNaN;
}

dependence::DependencyGroup& group_at(island_dependence* dep, size_t index) {
    if (index >= dep->spec.groups.size())
        fail(ErrorCode::index, "group " + std::to_string(index) + " out of range");
    return dep->spec.groups[index];
}

database::DatabaseSpec db_spec(uint64_t n, uint64_t k, const double* alphas, double uniform_total,
                               double outside_total, double p) {
    database::DatabaseSpec s;
    s.n = n;
    s.k = k;
    if (alphas) s.member_alphas.assign(alphas, alphas + n);
    else s.uniform_total = uniform_total;
    s.outside_total = outside_total;
    s.p = p;
    return s;
}

std::vector<std::vector<double>> unflatten(const size_t* counts, const double* flat, size_t groups) {
    std::vector<std::vector<double>> out(groups);
    size_t at = 0;
    for (size_t i = 0; i < groups; ++i) {
        out[i].assign(flat + at, flat + at + counts[i]);
        at += counts[i];
    }
    return out;
}

std::optional<std::size_t> suspect_of(long s) {
    if (s < 0) return std::nullopt;
    return static_cast<std::size_t>(s);
}

void fill(const oracle::OracleEstimate& e, island_oracle_estimate* out) {
    out->value = e.value;
    out->method = e.method == oracle::Method::exact ? ISLAND_ORACLE_EXACT : ISLAND_ORACLE_MONTE_CARLO;
    out->trials = e.trials.value_or(0);
    out->std_error = e.std_error.value_or(kNaN);
    out->seed = e.seed.value_or(0);
    out->accepted = e.accepted.value_or(0);
    out->total_mass = e.total_mass.value_or(kNaN);
}

}  // namespace

extern "C" {

const char* island_version(void) { return "1.0.0"; }

const char* island_last_error(void) { return g_last_error.c_str(); }

const char* island_status_name(island_status status) {
    switch (status) {
        case ISLAND_OK: return "ok";
        case ISLAND_E_NULL_ARGUMENT: return "null-argument";
        case ISLAND_E_BUFFER_TOO_SMALL: return "buffer-too-small";
        case ISLAND_E_OUT_OF_MEMORY: return "out-of-memory";
        case ISLAND_E_INTERNAL: return "internal";
        default: break;
    }
    if (status >= ISLAND_E_INVALID_VALUE && status <= ISLAND_E_VALIDATION)
        return to_string(static_cast<ErrorCode>(static_cast<int>(status))).data();
    return "unknown";
}

const char* island_convention_name(island_lr_convention convention) {
    if (convention < ISLAND_LR_CONDITIONAL_ON_I || convention > ISLAND_LR_CONSERVATIVE) return "unknown";
    return to_string(static_cast<LrConvention>(static_cast<int>(convention))).data();
}

const char* island_convention_note(island_lr_convention convention) {
    if (convention < ISLAND_LR_CONDITIONAL_ON_I || convention > ISLAND_LR_CONSERVATIVE) return "";
    return assumption_note(static_cast<LrConvention>(static_cast<int>(convention))).data();
}

island_status island_convention_parse(const char* name, island_lr_convention* out) {
    return api([&] {
        need(name, out);
        *out = static_cast<island_lr_convention>(static_cast<int>(lr_convention_from_string(name)));
    });
}

island_status island_probability_from_odds(double odds, double* out) {
    return api([&] {
        need(out);
        *out = probability_from_odds(Odds(odds)).value();
    });
}

island_status island_odds_from_probability(double probability, double* out) {
    return api([&] {
        need(out);
        *out = odds_from_probability(Probability(probability)).value();
    });
}

island_status island_integrate_samples(const double* samples, size_t count, double* out) {
    return api([&] {
        need(samples, out);
        check_resolution(static_cast<int>(count));
        *out = integrate_samples(std::span<const double>(samples, count));
    });
}

island_status island_classical_posterior(uint64_t n, double p, island_odds_result* out) {
    return api([&] {
        need(out);
        fill(classical::classical_posterior(n, p), out);
    });
}

island_status island_yellin_posterior(uint64_t n, double p, double* out) {
    return api([&] {
        need(out);
        *out = classical::yellin_posterior(n, p).value();
    });
}

island_status island_bearers_create(uint64_t n, double p, island_bearer_conditioning conditioning,
                                    island_bearers** out) {
    return api([&] {
        need(out);
        if (conditioning < ISLAND_BEARERS_UNCONDITIONED || conditioning > ISLAND_BEARERS_GIVEN_I_AND_E)
            fail(ErrorCode::validation, "unknown bearer conditioning");
        *out = new island_bearers{
            classical::BearerDistribution(n, p, static_cast<classical::BearerConditioning>(conditioning))};
    });
}

void island_bearers_destroy(island_bearers* b) { delete b; }

island_status island_bearers_mean(const island_bearers* b, double* out) {
    return api([&] {
        need(b, out);
        *out = b->b.mean();
    });
}

island_status island_bearers_inverse_mean(const island_bearers* b, double* out) {
    return api([&] {
        need(b, out);
        *out = b->b.inverse_mean();
    });
}

island_status island_bearers_probability(const island_bearers* b, uint64_t k, double* out) {
    return api([&] {
        need(b, out);
        *out = b->b.probability(k);
    });
}

island_status island_bearers_materialized(const island_bearers* b, int* out) {
    return api([&] {
        need(b, out);
        *out = b->b.materialized() ? 1 : 0;
    });
}

island_status island_density_beta(double a, double b, island_density** out) {
    return api([&] {
        need(out);
        *out = new island_density{FrequencyDensity::beta(a, b)};
    });
}

island_status island_density_beta_mean_sd(double mean, double sd, island_density** out) {
    return api([&] {
        need(out);
        *out = new island_density{FrequencyDensity::beta_from_mean_sd(mean, sd)};
    });
}

island_status island_density_tabulated(const double* values, size_t count, island_density_stage stage, int has_n,
                                       uint64_t n, island_density** out) {
    return api([&] {
        need(values, out);
        if (stage < ISLAND_STAGE_PRIOR_TO_CRIME || stage > ISLAND_STAGE_POST_MATCH)
            fail(ErrorCode::validation, "unknown density stage");
        std::optional<std::uint64_t> ctx;
        if (has_n) ctx = n;
        *out = new island_density{FrequencyDensity::tabulated(std::vector<double>(values, values + count),
                                                              static_cast<DensityStage>(stage), ctx)};
    });
}

island_status island_density_mixture(const double* atoms, const double* weights, size_t count, int resolution,
                                     island_density** out) {
    return api([&] {
        need(atoms, weights, out);
        *out = new island_density{FrequencyDensity::discrete_mixture(std::span<const double>(atoms, count),
                                                                     std::span<const double>(weights, count),
                                                                     resolution)};
    });
}

void island_density_destroy(island_density* d) { delete d; }

island_status island_density_stage_of(const island_density* d, island_density_stage* out) {
    return api([&] {
        need(d, out);
        *out = static_cast<island_density_stage>(static_cast<int>(d->d.stage()));
    });
}

island_status island_density_is_beta(const island_density* d, int* out, double* a, double* b) {
    return api([&] {
        need(d, out);
        const auto* bp = d->d.beta_params();
        *out = bp ? 1 : 0;
        if (a) *a = bp ? bp->a : kNaN;
        if (b) *b = bp ? bp->b : kNaN;
    });
}

island_status island_density_values(const island_density* d, int resolution, double* out, size_t cap, size_t* len) {
    return api([&] {
        need(d);
        copy_out(d->d.tabulate(resolution), out, cap, len);
    });
}

island_status island_density_transform(const island_density* d, island_direction direction, int has_n, uint64_t n,
                                       int resolution, island_density** out) {
    return api([&] {
        need(d, out);
        if (direction < ISLAND_CRIME_TO_SUSPECT || direction > ISLAND_SUSPECT_TO_CRIME)
            fail(ErrorCode::validation, "unknown transform direction");
        std::optional<std::uint64_t> ctx;
        if (has_n) ctx = n;
        *out = new island_density{
            uncertain::transform_density(d->d, static_cast<uncertain::Direction>(direction), ctx, resolution)};
    });
}

island_status island_density_moments(const island_density* d, int has_n, uint64_t n, island_moments* out) {
    return api([&] {
        need(d, out);
        std::optional<std::uint64_t> ctx;
        if (has_n) ctx = n;
        const auto m = uncertain::frequency_moments(d->d, ctx);
        out->p = m.p;
        out->sigma2 = m.sigma2;
        out->p_prime = m.p_prime;
        out->p_double_prime = m.p_double_prime.value_or(kNaN);
    });
}

island_status island_uncertain_posterior(uint64_t n, const island_density* d, island_odds_result* out) {
    return api([&] {
        need(d, out);
        fill(uncertain::uncertain_posterior(n, d->d), out);
    });
}

island_status island_expected_bearers_given_I(uint64_t n, const island_density* d, int resolution, double* out) {
    return api([&] {
        need(d, out);
        *out = uncertain::expected_bearers_given_I(n, d->d, resolution);
    });
}

island_status island_expected_inverse_bearers(uint64_t n, const island_density* d, int resolution, double* out) {
    return api([&] {
        need(d, out);
        *out = uncertain::expected_inverse_bearers_given_I_E(n, d->d, resolution);
    });
}

island_status island_population_create(island_population** out) {
    return api([&] {
        need(out);
        *out = new island_population{};
    });
}

void island_population_destroy(island_population* pop) { delete pop; }

island_status island_population_add_point(island_population* pop, uint64_t size, double p, double beta,
                                          double epsilon) {
    return api([&] {
        need(pop);
        pop->subpops.push_back(Subpopulation{size, PointFrequency{p}, Probability(beta), epsilon_of(epsilon)});
    });
}

island_status island_population_add_density(island_population* pop, uint64_t size, const island_density* d,
                                            double beta, double epsilon) {
    return api([&] {
        need(pop, d);
        pop->subpops.push_back(Subpopulation{size, d->d, Probability(beta), epsilon_of(epsilon)});
    });
}

island_status island_population_validate(const island_population* pop) {
    return api([&] {
        need(pop);
        (void)pop->model();
    });
}

island_status island_population_count(const island_population* pop, size_t* out) {
    return api([&] {
        need(pop, out);
        *out = pop->subpops.size();
    });
}

island_status island_population_swapped(const island_population* pop, island_population** out) {
    return api([&] {
        need(pop, out);
        *out = new island_population{pop->model().swapped_priors().subpops()};
    });
}

island_status island_alpha_from_beta(const island_population* pop, double* out, size_t cap, size_t* len) {
    return api([&] {
        need(pop);
        std::vector<double> v;
        for (const auto& a : subpop::alpha_from_beta(pop->model())) v.push_back(a.value());
        copy_out(v, out, cap, len);
    });
}

island_status island_hetero_posterior(const island_population* pop, size_t s, island_odds_result* out) {
    return api([&] {
        need(pop, out);
        fill(subpop::hetero_posterior_odds(pop->model(), s), out);
    });
}

island_status island_hetero_posterior_joint(const island_population* pop, size_t s, island_odds_result* out) {
    return api([&] {
        need(pop, out);
        fill(subpop::hetero_posterior_odds_joint(pop->model(), s), out);
    });
}

island_status island_hetero_lr(const island_population* pop, size_t s, island_lr_convention convention,
                               double* out) {
    return api([&] {
        need(pop, out);
        *out = subpop::hetero_lr(pop->model(), s, convention_of(convention)).value;
    });
}

island_status island_hetero_marginal(const island_population* pop, island_marginal_weights weights, double* out) {
    return api([&] {
        need(pop, out);
        const auto w = weights == ISLAND_WEIGHTS_EXACT ? subpop::MarginalWeights::exact
                                                       : subpop::MarginalWeights::trait_frequency;
        *out = subpop::hetero_posterior_marginal(pop->model(), w).value();
    });
}

island_status island_hetero_expected_bearers(const island_population* pop, size_t s, double* out) {
    return api([&] {
        need(pop, out);
        *out = subpop::hetero_expected_bearers(pop->model(), s);
    });
}

island_status island_uncertain_subpop_posterior(const island_population* pop, size_t s, int large_n, double* out) {
    return api([&] {
        need(pop, out);
        *out = uncertain::uncertain_subpop_posterior(pop->model(), s, large_n != 0).value();
    });
}

island_status island_uncertain_subpop_lr(const island_population* pop, size_t s, island_lr_convention convention,
                                         island_large_n_base base, double* out) {
    return api([&] {
        need(pop, out);
        const auto b = base == ISLAND_LARGE_N_CONDITIONAL ? uncertain::LargeNBase::conditional
                                                          : uncertain::LargeNBase::joint;
        *out = uncertain::uncertain_subpop_lr(pop->model(), s, convention_of(convention), b).value;
    });
}

island_status island_suspect_subpop_posterior(const island_population* pop, double* out, size_t cap, size_t* len) {
    return api([&] {
        need(pop);
        std::vector<double> v;
        for (const auto& a : uncertain::suspect_subpop_posterior(pop->model())) v.push_back(a.value());
        copy_out(v, out, cap, len);
    });
}

island_status island_unknown_subpop_posterior(const island_population* pop, double* out) {
    return api([&] {
        need(pop, out);
        *out = uncertain::unknown_subpop_posterior(pop->model()).value();
    });
}

island_status island_naive_homogeneous_posterior(const island_population* pop, double* out) {
    return api([&] {
        need(pop, out);
        *out = uncertain::naive_homogeneous_posterior(pop->model()).value();
    });
}

island_status island_dependence_create(island_ratio_kind kind, double suspect_frequency, double suspect_prior_given_I,
                                       island_dependence** out) {
    return api([&] {
        need(out);
        auto* dep = new island_dependence{};
        dep->spec.kind =
            kind == ISLAND_RATIO_BIAS ? dependence::RatioKind::bias_sigma : dependence::RatioKind::correlation_c;
        dep->spec.suspect_frequency = suspect_frequency;
        dep->spec.suspect_prior_given_I = suspect_prior_given_I;
        *out = dep;
    });
}

void island_dependence_destroy(island_dependence* dep) { delete dep; }

island_status island_dependence_set_suspect_unconditioned(island_dependence* dep, double prior) {
    return api([&] {
        need(dep);
        dep->spec.suspect_prior_unconditioned = prior;
    });
}

island_status island_dependence_add_group(island_dependence* dep, uint64_t count, double prior_given_I, double ratio,
                                          size_t* index) {
    return api([&] {
        need(dep);
        dependence::DependencyGroup g;
        g.count = count;
        g.prior_given_I = prior_given_I;
        g.ratio = ratio;
        dep->spec.groups.push_back(g);
        if (index) *index = dep->spec.groups.size() - 1;
    });
}

island_status island_dependence_set_group_unconditioned(island_dependence* dep, size_t index, double prior) {
    return api([&] {
        need(dep);
        group_at(dep, index).prior_unconditioned = prior;
    });
}

island_status island_dependence_set_group_frequency(island_dependence* dep, size_t index, double p) {
    return api([&] {
        need(dep);
        group_at(dep, index).frequency = p;
    });
}

island_status island_dependence_set_group_reverse_ratio(island_dependence* dep, size_t index, double c) {
    return api([&] {
        need(dep);
        group_at(dep, index).reverse_ratio = c;
    });
}

island_status island_dependence_group_ratio(const island_dependence* dep, size_t index, double* out) {
    return api([&] {
        need(dep, out);
        *out = group_at(const_cast<island_dependence*>(dep), index).ratio;
    });
}

island_status island_biased_search_odds(const island_dependence* dep, island_dependence_result* out) {
    return api([&] {
        need(dep, out);
        fill(dependence::biased_search_odds(dep->spec), out);
    });
}

island_status island_correlated_odds(const island_dependence* dep, island_conditioning conditioning,
                                     island_dependence_result* out) {
    return api([&] {
        need(dep, out);
        const auto c = conditioning == ISLAND_UNCONDITIONED ? dependence::Conditioning::unconditioned
                                                            : dependence::Conditioning::on_I;
        fill(dependence::correlated_odds(dep->spec, c), out);
    });
}

island_status island_bias_correlation_equivalent(const island_dependence* dep, island_dependence** out) {
    return api([&] {
        need(dep, out);
        *out = new island_dependence{dependence::bias_correlation_equivalent(dep->spec)};
    });
}

island_status island_database_focused(uint64_t n, uint64_t k, const double* alphas, double uniform_total,
                                      double outside_total, double p, island_odds_result* out) {
    return api([&] {
        need(out);
        fill(database::database_focused(db_spec(n, k, alphas, uniform_total, outside_total, p)), out);
    });
}

island_status island_individual_focused(uint64_t n, uint64_t k, const double* alphas, double uniform_total,
                                        double outside_total, double p, uint64_t target, island_odds_result* out) {
    return api([&] {
        need(out);
        fill(database::individual_focused(db_spec(n, k, alphas, uniform_total, outside_total, p), target), out);
    });
}

island_status island_database_effectiveness(uint64_t n, double p, double q, island_effectiveness* out) {
    return api([&] {
        need(out);
        const auto e = database::database_effectiveness(n, p, q);
        fill(e.odds, &out->odds);
        out->p_unique = e.p_unique.value();
        out->p_unique_exact = e.p_unique_exact.value();
    });
}

island_status island_match_count_distribution(uint64_t n, double p, double q, uint64_t kmax, double* out, size_t cap,
                                              size_t* len) {
    return api([&] {
        copy_out(database::match_count_distribution(n, p, q, kmax), out, cap, len);
    });
}

island_status island_double_match_coincidence(uint64_t n, double p, double q, double* out) {
    return api([&] {
        need(out);
        *out = database::double_match_coincidence(n, p, q);
    });
}

island_status island_growth_curve(uint64_t population, double p, island_inclusion inclusion, const uint64_t* sizes,
                                  size_t count, double* odds, double* p_unique) {
    return api([&] {
        need(sizes, odds, p_unique);
        database::GrowthModel model;
        model.population = population;
        model.p = p;
        model.kind = inclusion == ISLAND_INCLUSION_SQRT_WEIGHTED ? database::InclusionKind::sqrt_weighted
                                                                 : database::InclusionKind::random_sample;
        const auto curve = database::growth_curve(model, std::vector<std::uint64_t>(sizes, sizes + count));
        for (size_t i = 0; i < curve.size(); ++i) {
            odds[i] = curve[i].odds;
            p_unique[i] = curve[i].p_unique;
        }
    });
}

island_status island_enlargement_threshold(double q_n, double q_2n, int* out) {
    return api([&] {
        need(out);
        *out = database::enlargement_threshold(q_n, q_2n) ? 1 : 0;
    });
}

island_status island_scenario_create(size_t individuals, const size_t* subpop, const double* criminal_prior,
                                     island_scenario** out) {
    return api([&] {
        need(criminal_prior, out);
        auto sc = std::make_unique<island_scenario>();
        sc->spec.criminal_prior.assign(criminal_prior, criminal_prior + individuals);
        if (subpop) sc->spec.subpop.assign(subpop, subpop + individuals);
        else sc->spec.subpop.assign(individuals, 0);
        sc->spec.gamma = oracle::IndependentGamma{std::vector<double>(individuals, 0.5)};
        sc->spec.suspect = oracle::IndependentSuspect{std::vector<double>(individuals, 0.0)};
        *out = sc.release();
    });
}

void island_scenario_destroy(island_scenario* sc) { delete sc; }

island_status island_scenario_classical(uint64_t n, double p, island_scenario** out) {
    return api([&] {
        need(out);
        *out = new island_scenario{oracle::classical_scenario(n, p)};
    });
}

island_status island_scenario_yellin(uint64_t n, double p, island_scenario** out) {
    return api([&] {
        need(out);
        *out = new island_scenario{oracle::yellin_scenario(n, p)};
    });
}

island_status island_scenario_hetero(const uint64_t* sizes, const double* p, const double* beta, size_t count,
                                     long suspect_subpop, const double* epsilon, island_scenario** out) {
    return api([&] {
        need(sizes, p, beta, out);
        std::vector<std::size_t> sz(sizes, sizes + count);
        std::vector<double> eps;
        if (epsilon) eps.assign(epsilon, epsilon + count);
        *out = new island_scenario{oracle::hetero_scenario(sz, std::vector<double>(p, p + count),
                                                           std::vector<double>(beta, beta + count),
                                                           suspect_of(suspect_subpop), eps)};
    });
}

island_status island_scenario_uncertain(const uint64_t* sizes, const size_t* atom_counts, const double* atoms,
                                        const double* weights, const double* beta, size_t count, long suspect_subpop,
                                        const double* epsilon, island_scenario** out) {
    return api([&] {
        need(sizes, atom_counts, atoms, weights, beta, out);
        std::vector<std::size_t> sz(sizes, sizes + count);
        std::vector<double> eps;
        if (epsilon) eps.assign(epsilon, epsilon + count);
        *out = new island_scenario{oracle::uncertain_scenario(
            sz, unflatten(atom_counts, atoms, count), unflatten(atom_counts, weights, count),
            std::vector<double>(beta, beta + count), suspect_of(suspect_subpop), eps)};
    });
}

island_status island_scenario_database(uint64_t population, uint64_t n, double p, const double* criminal_prior,
                                       island_scenario** out) {
    return api([&] {
        need(out);
        std::vector<double> prior;
        if (criminal_prior) prior.assign(criminal_prior, criminal_prior + population);
        else prior.assign(population, 1.0 / static_cast<double>(population));
        *out = new island_scenario{oracle::database_scenario(population, n, p, prior)};
    });
}

island_status island_scenario_gamma_independent(island_scenario* sc, const double* p) {
    return api([&] {
        need(sc, p);
        sc->spec.gamma = oracle::IndependentGamma{std::vector<double>(p, p + sc->spec.individuals())};
    });
}

island_status island_scenario_gamma_mixture(island_scenario* sc, size_t subpops, const size_t* atom_counts,
                                            const double* atoms, const double* weights) {
    return api([&] {
        need(sc, atom_counts, atoms, weights);
        sc->spec.gamma =
            oracle::MixtureGamma{unflatten(atom_counts, atoms, subpops), unflatten(atom_counts, weights, subpops)};
    });
}

island_status island_scenario_gamma_joint(island_scenario* sc, const double* table, size_t count) {
    return api([&] {
        need(sc, table);
        sc->spec.gamma = oracle::JointGamma{std::vector<double>(table, table + count)};
    });
}

island_status island_scenario_suspect_prior(island_scenario* sc, const double* prior) {
    return api([&] {
        need(sc, prior);
        sc->spec.suspect = oracle::IndependentSuspect{std::vector<double>(prior, prior + sc->spec.individuals())};
    });
}

island_status island_scenario_suspect_biased(island_scenario* sc, const double* given) {
    return api([&] {
        need(sc, given);
        const std::size_t m = sc->spec.individuals();
        oracle::BiasedSuspect b;
        for (std::size_t y = 0; y < m; ++y) b.given.emplace_back(given + y * m, given + (y + 1) * m);
        sc->spec.suspect = std::move(b);
    });
}

island_status island_scenario_suspect_sequential(island_scenario* sc) {
    return api([&] {
        need(sc);
        sc->spec.suspect = oracle::SequentialSearch{};
    });
}

island_status island_scenario_suspect_database(island_scenario* sc) {
    return api([&] {
        need(sc);
        sc->spec.suspect = oracle::DatabaseMatch{};
    });
}

island_status island_scenario_database_members(island_scenario* sc, const size_t* members, size_t n) {
    return api([&] {
        need(sc);
        if (n > 0) need(members);
        sc->spec.database.assign(members, members + n);
    });
}

island_status island_scenario_individuals(const island_scenario* sc, size_t* out) {
    return api([&] {
        need(sc, out);
        *out = sc->spec.individuals();
    });
}

island_status island_oracle_exact(const island_scenario* sc, const char* event, const char* conditioning,
                                  island_oracle_estimate* out) {
    return api([&] {
        need(sc, event, conditioning, out);
        fill(oracle::exact_posterior(sc->spec, oracle::parse_event(event), oracle::parse_event(conditioning)), out);
    });
}

island_status island_oracle_mc(const island_scenario* sc, const char* event, const char* conditioning,
                               uint64_t trials, uint64_t seed, unsigned threads, island_oracle_estimate* out) {
    return api([&] {
        need(sc, event, conditioning, out);
        fill(oracle::mc_posterior(sc->spec, oracle::parse_event(event), oracle::parse_event(conditioning), trials,
                                  seed, threads),
             out);
    });
}

}  // extern "C"
