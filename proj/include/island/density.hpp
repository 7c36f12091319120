#pragma once
// Distribution of the unknown trait frequency W on [0,1].
//
// A density is either a Beta law (closed-form moments; used for smoke tests and
// for paper-scale frequencies whose mass sits far below the first grid node) or
// a tabulation on a uniform grid, which is what every transform produces except
// the conjugate Beta(a,b) -> Beta(a+1,b) update.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "island/quadrature.hpp"

namespace island {

/// chi, chi_I and chi_{I,E}: before the crime, after learning the criminal's
/// trait, and after learning the suspect matches as well.
enum class DensityStage { prior_to_crime, prior_to_suspect, post_match };

const char* to_string(DensityStage stage) noexcept;

struct BetaParams {
    double a = 1.0;
    double b = 1.0;
};

struct TabulatedGrid {
    std::vector<double> values;  // density at t_i = i/(n-1), normalized
};

struct DensityMoments {
    double mean = 0.0;
    double variance = 0.0;
    double third_raw = 0.0;  // E[W^3]
};

class FrequencyDensity {
public:
    static FrequencyDensity beta(double a, double b, DensityStage stage = DensityStage::prior_to_crime,
                                 std::optional<std::uint64_t> context_n = std::nullopt);
    /// Method-of-moments Beta with the given mean and standard deviation.
    static FrequencyDensity beta_from_mean_sd(double mean, double sd,
                                              DensityStage stage = DensityStage::prior_to_crime);
    /// Tabulated density; `values` are rescaled so the Simpson integral is 1.
    static FrequencyDensity tabulated(std::vector<double> values,
                                      DensityStage stage = DensityStage::prior_to_crime,
                                      std::optional<std::uint64_t> context_n = std::nullopt);
    /// Finite mixture of point masses encoded as single-node spikes on a grid of
    /// `resolution` nodes. Each atom is snapped to its nearest node, so the peak
    /// width is 1/(resolution-1); atoms on grid nodes are represented exactly.
    static FrequencyDensity discrete_mixture(std::span<const double> atoms, std::span<const double> weights,
                                             int resolution = kDefaultResolution,
                                             DensityStage stage = DensityStage::prior_to_crime);

    DensityStage stage() const noexcept { return stage_; }
    std::optional<std::uint64_t> context_n() const noexcept { return context_n_; }

    bool is_beta() const noexcept { return std::holds_alternative<BetaParams>(rep_); }
    const BetaParams* beta_params() const noexcept { return std::get_if<BetaParams>(&rep_); }
    const TabulatedGrid* grid() const noexcept { return std::get_if<TabulatedGrid>(&rep_); }

    DensityMoments moments() const;
    double mean() const { return moments().mean; }

    /// Density values on a uniform grid. Grids are returned as stored (the
    /// resolution argument is ignored); Beta laws are evaluated at `resolution`
    /// nodes, failing if the density is unbounded at an endpoint.
    std::vector<double> tabulate(int resolution = kDefaultResolution) const;

    FrequencyDensity with_stage(DensityStage stage, std::optional<std::uint64_t> context_n) const;

private:
    FrequencyDensity(std::variant<BetaParams, TabulatedGrid> rep, DensityStage stage,
                     std::optional<std::uint64_t> context_n);
    void validate() const;

    std::variant<BetaParams, TabulatedGrid> rep_;
    DensityStage stage_;
    std::optional<std::uint64_t> context_n_;
};

double beta_pdf(double t, double a, double b);

}  // namespace island
