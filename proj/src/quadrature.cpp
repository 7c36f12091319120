#include "island/quadrature.hpp"

#include <cmath>
#include <string>

#include "island/core.hpp"

namespace island {

void check_resolution(int nodes) {
    if (nodes < 3 || nodes % 2 == 0)
        fail(ErrorCode::validation,
             "quadrature resolution must be odd and >= 3, got " + std::to_string(nodes));
}

std::vector<double> grid_nodes(int nodes) {
    check_resolution(nodes);
    std::vector<double> t(static_cast<std::size_t>(nodes));
    const double h = 1.0 / (nodes - 1);
    for (int i = 0; i < nodes; ++i) t[i] = i * h;
    t.back() = 1.0;
    return t;
}

std::vector<double> simpson_weights(int nodes) {
    check_resolution(nodes);
    std::vector<double> w(static_cast<std::size_t>(nodes));
    const double h = 1.0 / (nodes - 1);
    for (int i = 0; i < nodes; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    w.front() = w.back() = h / 3.0;
    return w;
}

double integrate_samples(std::span<const double> samples) {
    const int n = static_cast<int>(samples.size());
    check_resolution(n);
    double ends = samples.front() + samples.back();
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n - 1; ++i) {
        const double v = samples[i];
        if (!std::isfinite(v))
            fail(ErrorCode::numerical_domain, "non-finite sample at node " + std::to_string(i));
        (i % 2 == 1 ? odd : even) += v;
    }
    if (!std::isfinite(ends)) fail(ErrorCode::numerical_domain, "non-finite sample at an endpoint");
    const double h = 1.0 / (n - 1);
    return h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
}

double integrate(const std::function<double(double)>& f, int resolution) {
    const auto t = grid_nodes(resolution);
    std::vector<double> y(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) y[i] = f(t[i]);
    return integrate_samples(y);
}

}  // namespace island
