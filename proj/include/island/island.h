/* C interface to the island library.
 *
 * Every function returns an island_status; ISLAND_OK is 0. On failure the
 * message for the calling thread is available from island_last_error() until
 * the next failing call on that thread. Objects are opaque handles created by
 * *_create and friends and released with the matching *_destroy.
 *
 * Array outputs take a capacity and report the required length through
 * `len`; a short buffer yields ISLAND_E_BUFFER_TOO_SMALL with *len set.
 */
#ifndef ISLAND_ISLAND_H
#define ISLAND_ISLAND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ISLAND_API __declspec(dllexport)
#elif defined(__GNUC__)
#define ISLAND_API __attribute__((visibility("default")))
#else
#define ISLAND_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum island_status {
    ISLAND_OK = 0,
    ISLAND_E_INVALID_VALUE = 1,
    ISLAND_E_DOMAIN = 2,
    ISLAND_E_NUMERICAL_DOMAIN = 3,
    ISLAND_E_STAGE = 4,
    ISLAND_E_CONVENTION_MISMATCH = 5,
    ISLAND_E_NO_EQUIVALENT = 6,
    ISLAND_E_PRECONDITION = 7,
    ISLAND_E_INDEX = 8,
    ISLAND_E_CONDITIONING_IMPOSSIBLE = 9,
    ISLAND_E_CAPACITY = 10,
    ISLAND_E_INFEASIBLE_CONDITIONING = 11,
    ISLAND_E_VALIDATION = 12,
    ISLAND_E_NULL_ARGUMENT = 50,
    ISLAND_E_BUFFER_TOO_SMALL = 51,
    ISLAND_E_OUT_OF_MEMORY = 98,
    ISLAND_E_INTERNAL = 99
} island_status;

typedef enum island_lr_convention {
    ISLAND_LR_CONDITIONAL_ON_I = 0,
    ISLAND_LR_JOINT_I_AND_E = 1,
    ISLAND_LR_LARGE_N = 2,
    ISLAND_LR_DEFAULT_POPULATION = 3,
    ISLAND_LR_CONSERVATIVE = 4
} island_lr_convention;

typedef enum island_density_stage {
    ISLAND_STAGE_PRIOR_TO_CRIME = 0,
    ISLAND_STAGE_PRIOR_TO_SUSPECT = 1,
    ISLAND_STAGE_POST_MATCH = 2
} island_density_stage;

typedef enum island_direction {
    ISLAND_CRIME_TO_SUSPECT = 0,
    ISLAND_SUSPECT_TO_MATCH = 1,
    ISLAND_MATCH_TO_SUSPECT = 2,
    ISLAND_SUSPECT_TO_CRIME = 3
} island_direction;

typedef enum island_bearer_conditioning {
    ISLAND_BEARERS_UNCONDITIONED = 0,
    ISLAND_BEARERS_GIVEN_I = 1,
    ISLAND_BEARERS_GIVEN_I_AND_E = 2
} island_bearer_conditioning;

typedef enum island_ratio_kind { ISLAND_RATIO_CORRELATION = 0, ISLAND_RATIO_BIAS = 1 } island_ratio_kind;

typedef enum island_conditioning { ISLAND_ON_I = 0, ISLAND_UNCONDITIONED = 1 } island_conditioning;

typedef enum island_marginal_weights {
    ISLAND_WEIGHTS_EXACT = 0,
    ISLAND_WEIGHTS_TRAIT_FREQUENCY = 1
} island_marginal_weights;

typedef enum island_large_n_base { ISLAND_LARGE_N_JOINT = 0, ISLAND_LARGE_N_CONDITIONAL = 1 } island_large_n_base;

typedef enum island_inclusion {
    ISLAND_INCLUSION_RANDOM_SAMPLE = 0,
    ISLAND_INCLUSION_SQRT_WEIGHTED = 1
} island_inclusion;

typedef enum island_oracle_method { ISLAND_ORACLE_EXACT = 0, ISLAND_ORACLE_MONTE_CARLO = 1 } island_oracle_method;

typedef struct island_odds_result {
    double odds;
    double probability;
    double prior_odds;
    double lr;
    island_lr_convention convention;
    double correction;
    int degenerate;
} island_odds_result;

typedef struct island_moments {
    double p;
    double sigma2;
    double p_prime;
    double p_double_prime; /* NaN unless N was given */
} island_moments;

typedef struct island_dependence_result {
    island_odds_result result;
    double effective_lr;
    double guilt_given_selection; /* NaN unless biased search */
} island_dependence_result;

typedef struct island_effectiveness {
    island_odds_result odds;
    double p_unique;
    double p_unique_exact;
} island_effectiveness;

typedef struct island_oracle_estimate {
    double value;
    island_oracle_method method;
    uint64_t trials;   /* 0 for exact */
    double std_error;  /* NaN for exact */
    uint64_t seed;
    uint64_t accepted;
    double total_mass; /* NaN for Monte-Carlo */
} island_oracle_estimate;

typedef struct island_density island_density;
typedef struct island_population island_population;
typedef struct island_dependence island_dependence;
typedef struct island_bearers island_bearers;
typedef struct island_scenario island_scenario;

/* Library and errors */
ISLAND_API const char* island_version(void);
ISLAND_API const char* island_last_error(void);
ISLAND_API const char* island_status_name(island_status status);
ISLAND_API const char* island_convention_name(island_lr_convention convention);
ISLAND_API const char* island_convention_note(island_lr_convention convention);
ISLAND_API island_status island_convention_parse(const char* name, island_lr_convention* out);

ISLAND_API island_status island_probability_from_odds(double odds, double* out);
ISLAND_API island_status island_odds_from_probability(double probability, double* out);
ISLAND_API island_status island_integrate_samples(const double* samples, size_t count, double* out);

/* Homogeneous population */
ISLAND_API island_status island_classical_posterior(uint64_t n, double p, island_odds_result* out);
ISLAND_API island_status island_yellin_posterior(uint64_t n, double p, double* out);
ISLAND_API island_status island_bearers_create(uint64_t n, double p, island_bearer_conditioning conditioning,
                                               island_bearers** out);
ISLAND_API void island_bearers_destroy(island_bearers* b);
ISLAND_API island_status island_bearers_mean(const island_bearers* b, double* out);
ISLAND_API island_status island_bearers_inverse_mean(const island_bearers* b, double* out);
ISLAND_API island_status island_bearers_probability(const island_bearers* b, uint64_t k, double* out);
ISLAND_API island_status island_bearers_materialized(const island_bearers* b, int* out);

/* Frequency densities */
ISLAND_API island_status island_density_beta(double a, double b, island_density** out);
ISLAND_API island_status island_density_beta_mean_sd(double mean, double sd, island_density** out);
ISLAND_API island_status island_density_tabulated(const double* values, size_t count, island_density_stage stage,
                                                  int has_n, uint64_t n, island_density** out);
ISLAND_API island_status island_density_mixture(const double* atoms, const double* weights, size_t count,
                                                int resolution, island_density** out);
ISLAND_API void island_density_destroy(island_density* d);
ISLAND_API island_status island_density_stage_of(const island_density* d, island_density_stage* out);
ISLAND_API island_status island_density_is_beta(const island_density* d, int* out, double* a, double* b);
ISLAND_API island_status island_density_values(const island_density* d, int resolution, double* out, size_t cap,
                                               size_t* len);
ISLAND_API island_status island_density_transform(const island_density* d, island_direction direction, int has_n,
                                                  uint64_t n, int resolution, island_density** out);
ISLAND_API island_status island_density_moments(const island_density* d, int has_n, uint64_t n,
                                                island_moments* out);
ISLAND_API island_status island_uncertain_posterior(uint64_t n, const island_density* d, island_odds_result* out);
ISLAND_API island_status island_expected_bearers_given_I(uint64_t n, const island_density* d, int resolution,
                                                         double* out);
ISLAND_API island_status island_expected_inverse_bearers(uint64_t n, const island_density* d, int resolution,
                                                         double* out);

/* Populations of subpopulations. `epsilon` < 0 means not given. */
ISLAND_API island_status island_population_create(island_population** out);
ISLAND_API void island_population_destroy(island_population* pop);
ISLAND_API island_status island_population_add_point(island_population* pop, uint64_t size, double p, double beta,
                                                     double epsilon);
ISLAND_API island_status island_population_add_density(island_population* pop, uint64_t size,
                                                       const island_density* d, double beta, double epsilon);
ISLAND_API island_status island_population_validate(const island_population* pop);
ISLAND_API island_status island_population_count(const island_population* pop, size_t* out);
ISLAND_API island_status island_population_swapped(const island_population* pop, island_population** out);

ISLAND_API island_status island_alpha_from_beta(const island_population* pop, double* out, size_t cap, size_t* len);
ISLAND_API island_status island_hetero_posterior(const island_population* pop, size_t s, island_odds_result* out);
ISLAND_API island_status island_hetero_posterior_joint(const island_population* pop, size_t s,
                                                       island_odds_result* out);
ISLAND_API island_status island_hetero_lr(const island_population* pop, size_t s, island_lr_convention convention,
                                          double* out);
ISLAND_API island_status island_hetero_marginal(const island_population* pop, island_marginal_weights weights,
                                                double* out);
ISLAND_API island_status island_hetero_expected_bearers(const island_population* pop, size_t s, double* out);

ISLAND_API island_status island_uncertain_subpop_posterior(const island_population* pop, size_t s, int large_n,
                                                           double* out);
ISLAND_API island_status island_uncertain_subpop_lr(const island_population* pop, size_t s,
                                                    island_lr_convention convention, island_large_n_base base,
                                                    double* out);
ISLAND_API island_status island_suspect_subpop_posterior(const island_population* pop, double* out, size_t cap,
                                                         size_t* len);
ISLAND_API island_status island_unknown_subpop_posterior(const island_population* pop, double* out);
ISLAND_API island_status island_naive_homogeneous_posterior(const island_population* pop, double* out);

/* Biased search and correlated traits */
ISLAND_API island_status island_dependence_create(island_ratio_kind kind, double suspect_frequency,
                                                  double suspect_prior_given_I, island_dependence** out);
ISLAND_API void island_dependence_destroy(island_dependence* dep);
ISLAND_API island_status island_dependence_set_suspect_unconditioned(island_dependence* dep, double prior);
ISLAND_API island_status island_dependence_add_group(island_dependence* dep, uint64_t count, double prior_given_I,
                                                     double ratio, size_t* index);
ISLAND_API island_status island_dependence_set_group_unconditioned(island_dependence* dep, size_t index,
                                                                   double prior);
ISLAND_API island_status island_dependence_set_group_frequency(island_dependence* dep, size_t index, double p);
ISLAND_API island_status island_dependence_set_group_reverse_ratio(island_dependence* dep, size_t index,
                                                                   double c);
ISLAND_API island_status island_dependence_group_ratio(const island_dependence* dep, size_t index, double* out);
ISLAND_API island_status island_biased_search_odds(const island_dependence* dep, island_dependence_result* out);
ISLAND_API island_status island_correlated_odds(const island_dependence* dep, island_conditioning conditioning,
                                                island_dependence_result* out);
ISLAND_API island_status island_bias_correlation_equivalent(const island_dependence* dep, island_dependence** out);

/* Database searches. `alphas` may be NULL, in which case `uniform_total` is
 * spread evenly over the n members. Members 0..k-1 are the matched ones. */
ISLAND_API island_status island_database_focused(uint64_t n, uint64_t k, const double* alphas, double uniform_total,
                                                 double outside_total, double p, island_odds_result* out);
ISLAND_API island_status island_individual_focused(uint64_t n, uint64_t k, const double* alphas,
                                                   double uniform_total, double outside_total, double p,
                                                   uint64_t target, island_odds_result* out);
ISLAND_API island_status island_database_effectiveness(uint64_t n, double p, double q, island_effectiveness* out);
ISLAND_API island_status island_match_count_distribution(uint64_t n, double p, double q, uint64_t kmax, double* out,
                                                         size_t cap, size_t* len);
ISLAND_API island_status island_double_match_coincidence(uint64_t n, double p, double q, double* out);
ISLAND_API island_status island_growth_curve(uint64_t population, double p, island_inclusion inclusion,
                                             const uint64_t* sizes, size_t count, double* odds, double* p_unique);
ISLAND_API island_status island_enlargement_threshold(double q_n, double q_2n, int* out);

/* Oracle scenarios. Individual 0 is the fixed suspect in the builders that
 * take one. `suspect_subpop` < 0 means the suspect is drawn from epsilon (or
 * uniformly when `epsilon` is NULL). Mixture atoms and weights are flattened
 * per subpopulation with `atom_counts[i]` entries each. */
ISLAND_API island_status island_scenario_create(size_t individuals, const size_t* subpop,
                                                const double* criminal_prior, island_scenario** out);
ISLAND_API void island_scenario_destroy(island_scenario* sc);
ISLAND_API island_status island_scenario_classical(uint64_t n, double p, island_scenario** out);
ISLAND_API island_status island_scenario_yellin(uint64_t n, double p, island_scenario** out);
ISLAND_API island_status island_scenario_hetero(const uint64_t* sizes, const double* p, const double* beta,
                                                size_t count, long suspect_subpop, const double* epsilon,
                                                island_scenario** out);
ISLAND_API island_status island_scenario_uncertain(const uint64_t* sizes, const size_t* atom_counts,
                                                   const double* atoms, const double* weights, const double* beta,
                                                   size_t count, long suspect_subpop, const double* epsilon,
                                                   island_scenario** out);
ISLAND_API island_status island_scenario_database(uint64_t population, uint64_t n, double p,
                                                  const double* criminal_prior, island_scenario** out);
ISLAND_API island_status island_scenario_gamma_independent(island_scenario* sc, const double* p);
ISLAND_API island_status island_scenario_gamma_mixture(island_scenario* sc, size_t subpops,
                                                       const size_t* atom_counts, const double* atoms,
                                                       const double* weights);
ISLAND_API island_status island_scenario_gamma_joint(island_scenario* sc, const double* table, size_t count);
ISLAND_API island_status island_scenario_suspect_prior(island_scenario* sc, const double* prior);
/* Row-major: given[y * individuals + x] = P(S = x | C = y). */
ISLAND_API island_status island_scenario_suspect_biased(island_scenario* sc, const double* given);
ISLAND_API island_status island_scenario_suspect_sequential(island_scenario* sc);
ISLAND_API island_status island_scenario_suspect_database(island_scenario* sc);
ISLAND_API island_status island_scenario_database_members(island_scenario* sc, const size_t* members, size_t n);
ISLAND_API island_status island_scenario_individuals(const island_scenario* sc, size_t* out);

ISLAND_API island_status island_oracle_exact(const island_scenario* sc, const char* event, const char* conditioning,
                                             island_oracle_estimate* out);
/* threads = 0 uses every hardware thread; the result does not depend on it. */
ISLAND_API island_status island_oracle_mc(const island_scenario* sc, const char* event, const char* conditioning,
                                          uint64_t trials, uint64_t seed, unsigned threads,
                                          island_oracle_estimate* out);

#ifdef __cplusplus
}
#endif

#endif
