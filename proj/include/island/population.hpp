#pragma once
// Population structure: a disjoint union of subpopulations, each with a size,
// a trait frequency, the prior that it contains the criminal (beta) and,
// optionally, the prior that it contains the suspect (epsilon).

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "island/core.hpp"
#include "island/density.hpp"

namespace island {

struct PointFrequency {
    double p = 0.0;
};

using FrequencySpec = std::variant<PointFrequency, FrequencyDensity>;

struct Subpopulation {
    std::uint64_t size = 1;
    FrequencySpec freq = PointFrequency{};
    Probability beta;
    std::optional<Probability> epsilon;
};

/// Mean and variance of a subpopulation's trait frequency (variance 0 for a
/// point frequency).
struct FrequencySummary {
    double p = 0.0;
    double variance = 0.0;
};

FrequencySummary summarize(const FrequencySpec& freq);

class PopulationModel {
public:
    explicit PopulationModel(std::vector<Subpopulation> subpops);

    /// Homogeneous population of `size` individuals.
    static PopulationModel homogeneous(std::uint64_t size, FrequencySpec freq);

    std::size_t count() const noexcept { return subpops_.size(); }
    const Subpopulation& operator[](std::size_t i) const { return subpops_.at(i); }
    const std::vector<Subpopulation>& subpops() const noexcept { return subpops_; }
    std::uint64_t total_size() const noexcept;

    bool has_epsilon() const noexcept;
    /// Throws validation error unless every subpopulation carries epsilon and
    /// the epsilons sum to one.
    void require_epsilon() const;
    /// Throws precondition error unless every frequency is a point value.
    void require_point_frequencies() const;
    void check_index(std::size_t s) const;

    /// The same model with beta and epsilon exchanged.
    PopulationModel swapped_priors() const;

private:
    std::vector<Subpopulation> subpops_;
};

}  // namespace island
