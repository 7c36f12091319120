#pragma once
// Brute-force reference for every model: a finite population with an explicit
// joint law for (W, Gamma, C, S). Queries are answered either by exact
// enumeration of that law or by rejection sampling from it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "island/core.hpp"

namespace island::oracle {

inline constexpr std::size_t kMaxExactIndividuals = 20;
inline constexpr std::size_t kMaxAtoms = 4;
inline constexpr std::size_t kMaxExactDatabase = 8;
inline constexpr std::uint64_t kPilotTrials = 10'000;
inline constexpr double kMinAcceptance = 1e-4;

/// Gamma_x ~ Bernoulli(p_x), independently.
struct IndependentGamma {
    std::vector<double> p;
};

/// Each subpopulation draws its frequency W_i from a finite mixture; given the
/// W's, the Gamma_x are independent Bernoulli(W_{sub(x)}).
struct MixtureGamma {
    std::vector<std::vector<double>> atoms;    // per subpopulation
    std::vector<std::vector<double>> weights;  // per subpopulation
};

/// Explicit law of the Gamma vector: entry m is P(Gamma = m), bit x of m being
/// Gamma_x.
struct JointGamma {
    std::vector<double> table;
};

using GammaLaw = std::variant<IndependentGamma, MixtureGamma, JointGamma>;

/// S independent of C and Gamma. Mass missing from the vector goes to S = *.
struct IndependentSuspect {
    std::vector<double> prior;
};

/// P(S = x | C = y) = given[y][x].
struct BiasedSuspect {
    std::vector<std::vector<double>> given;
};

/// Individuals are inspected in uniformly random order; S is the first
/// Gamma-bearer, or * if there is none.
struct SequentialSearch {};

/// S is the only database member with Gamma when there is exactly one, and *
/// otherwise.
struct DatabaseMatch {};

using SuspectProtocol = std::variant<IndependentSuspect, BiasedSuspect, SequentialSearch, DatabaseMatch>;

struct ScenarioSpec {
    std::string variant = "custom";
    std::vector<std::size_t> subpop;  // subpopulation of each individual
    std::vector<double> criminal_prior;
    GammaLaw gamma = IndependentGamma{};
    SuspectProtocol suspect = IndependentSuspect{};
    std::vector<std::size_t> database;  // members in order x_1, ..., x_n

    std::size_t individuals() const noexcept { return criminal_prior.size(); }
    void validate() const;
};

enum class AtomKind { G, I, E, E1, ED, S_is, S_none, C_is, S_in, C_in, C_in_D };

struct Atom {
    AtomKind kind = AtomKind::G;
    std::uint64_t arg = 0;
    bool negated = false;
};

/// Conjunction of atoms.
struct Event {
    std::vector<Atom> atoms;
};

/// Parses atoms joined by '&' or ','. Atoms: G, I, E, E1, ED=k, S=x, S=*,
/// C=x, S_in=i, C_in=i, C_in_D; a leading '!' negates one.
Event parse_event(std::string_view text);
std::string to_string(const Event& event);

enum class Method { exact, monte_carlo };

struct OracleEstimate {
    double value = 0.0;
    Method method = Method::exact;
    std::optional<std::uint64_t> trials;
    std::optional<double> std_error;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> accepted;
    /// Exact only: total probability of the enumerated space.
    std::optional<double> total_mass;
};

OracleEstimate exact_posterior(const ScenarioSpec& spec, const Event& event, const Event& conditioning);

/// `threads` = 0 uses the hardware concurrency. The estimate depends only on
/// (spec, event, conditioning, trials, seed).
OracleEstimate mc_posterior(const ScenarioSpec& spec, const Event& event, const Event& conditioning,
                            std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

// Scenario builders. Individual 0 is the suspect wherever a fixed suspect is
// meant.

/// N+1 individuals, uniform criminal, S = individual 0.
ScenarioSpec classical_scenario(std::size_t n, double p);
/// As classical with the sequential search protocol.
ScenarioSpec yellin_scenario(std::size_t n, double p);
/// Subpopulations of the given sizes laid out consecutively, criminal prior
/// beta_i / N_i. `suspect` fixes S to the first member of that subpopulation;
/// otherwise S follows epsilon_i / N_i, or is uniform when epsilon is empty.
ScenarioSpec hetero_scenario(const std::vector<std::size_t>& sizes, const std::vector<double>& p,
                             const std::vector<double>& beta, std::optional<std::size_t> suspect,
                             const std::vector<double>& epsilon = {});
/// Like hetero_scenario with a finite mixture for each subpopulation's W.
ScenarioSpec uncertain_scenario(const std::vector<std::size_t>& sizes, const std::vector<std::vector<double>>& atoms,
                                const std::vector<std::vector<double>>& weights, const std::vector<double>& beta,
                                std::optional<std::size_t> suspect, const std::vector<double>& epsilon = {});
/// Population of `population` individuals; the first `n` form the database.
ScenarioSpec database_scenario(std::size_t population, std::size_t n, double p,
                               const std::vector<double>& criminal_prior);

}  // namespace island::oracle
