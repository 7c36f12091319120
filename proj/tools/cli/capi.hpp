#pragma once
// Thin owning wrappers over the C handles, and the error type the commands
// throw.

#include <memory>
#include <stdexcept>
#include <string>

#include "island/island.h"

namespace cli {

enum Exit { kOk = 0, kComputation = 1, kValidation = 2 };

class Failure : public std::runtime_error {
public:
    Failure(int exit_code, const std::string& msg) : std::runtime_error(msg), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

[[noreturn]] inline void invalid(const std::string& path, const std::string& msg) {
    throw Failure(kValidation, path.empty() ? msg : path + ": " + msg);
}

inline std::string describe(island_status st) {
    return std::string(island_status_name(st)) + ": " + island_last_error();
}

/// Status from a computation: any failure is exit 1.
inline void check(island_status st) {
    if (st != ISLAND_OK) throw Failure(kComputation, describe(st));
}

/// Status from building objects out of document fields: failures are blamed
/// on `path` and exit 2.
inline void check_input(island_status st, const std::string& path) {
    if (st != ISLAND_OK) invalid(path, describe(st));
}

struct DensityFree {
    void operator()(island_density* d) const { island_density_destroy(d); }
};
struct PopulationFree {
    void operator()(island_population* p) const { island_population_destroy(p); }
};
struct DependenceFree {
    void operator()(island_dependence* d) const { island_dependence_destroy(d); }
};
struct ScenarioFree {
    void operator()(island_scenario* s) const { island_scenario_destroy(s); }
};

using Density = std::unique_ptr<island_density, DensityFree>;
using Population = std::unique_ptr<island_population, PopulationFree>;
using Dependence = std::unique_ptr<island_dependence, DependenceFree>;
using Scenario = std::unique_ptr<island_scenario, ScenarioFree>;

}  // namespace cli
