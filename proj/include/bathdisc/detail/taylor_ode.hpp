// taylor_ode.hpp — truncated-Taylor stepping for y' = A y with constant A.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace bathdisc::detail {

// Advances y through dt. `apply` evaluates A * v; norm_bound must dominate
// ||A|| so that every substep keeps ||A h|| <= 1/2, where the truncation
// error of the order-16 expansion is far below double precision.
template <class ApplyA>
inline void taylor_advance(ApplyA&& apply, double norm_bound, double dt, Eigen::VectorXcd& y,
                           int order = 16) {
    const int substeps = std::max(1, static_cast<int>(std::ceil(std::abs(dt) * norm_bound / 0.5)));
    const double h = dt / substeps;
    Eigen::VectorXcd term(y.size());
    for (int s = 0; s < substeps; ++s) {
        term = y;
        for (int k = 1; k <= order; ++k) {
            term = apply(term) * (h / k);
            y += term;
        }
    }
}

} // namespace bathdisc::detail
