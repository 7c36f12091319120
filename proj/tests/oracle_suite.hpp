#pragma once
// Small instances on which every closed form is compared with the brute-force
// oracle.

#include <string>
#include <vector>

#include "island/oracle.hpp"

namespace suite {

struct GridCase {
    std::string family;
    std::string name;
    double closed = 0.0;
    double oracle = 0.0;
};

/// Exact enumeration against the closed forms.
std::vector<GridCase> exact_grid();

struct McCase {
    std::string name;
    island::oracle::ScenarioSpec spec;
    std::string event;
    std::string given;
    double closed = 0.0;
};

std::vector<McCase> mc_cases();

}  // namespace suite
