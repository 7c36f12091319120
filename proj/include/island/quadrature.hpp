#pragma once
// Composite Simpson rule on a uniform grid over [0,1].

#include <functional>
#include <span>
#include <vector>

namespace island {

inline constexpr int kDefaultResolution = 4097;

/// Throws validation error unless `nodes` is odd and at least 3.
void check_resolution(int nodes);

/// Grid abscissae t_i = i/(nodes-1).
std::vector<double> grid_nodes(int nodes);

/// Simpson weights for `nodes` equally spaced points on [0,1].
std::vector<double> simpson_weights(int nodes);

/// Integral over [0,1] of a function tabulated on the uniform grid.
double integrate_samples(std::span<const double> samples);

/// Integral over [0,1] of `f`, sampled at `resolution` nodes. Non-finite
/// samples raise a numerical-domain error.
double integrate(const std::function<double(double)>& f, int resolution = kDefaultResolution);

}  // namespace island
