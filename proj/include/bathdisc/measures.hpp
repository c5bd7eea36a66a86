// measures.hpp — integrated error between trajectories and the numeric
// single-mode influence.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bathdisc/bath.hpp"
#include "bathdisc/propagate.hpp"

namespace bathdisc {

struct QuadratureConfig {
    std::size_t n_samples = 2001;
    enum class Rule { Simpson } rule = Rule::Simpson;

    void validate() const {
        if (n_samples < 3 || n_samples % 2 == 0)
            throw std::invalid_argument("quadrature: Simpson needs an odd sample count >= 3");
    }
};

// Composite Simpson rule on a uniform grid (odd point count).
inline double simpson(std::span<const double> y, double step) {
    if (y.size() < 3 || y.size() % 2 == 0)
        throw std::invalid_argument("quadrature: Simpson needs an odd sample count >= 3");
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t j = 1; j + 1 < y.size(); j += 2) odd += y[j];
    for (std::size_t j = 2; j + 1 < y.size(); j += 2) even += y[j];
    return step / 3.0 * (y.front() + y.back() + 4.0 * odd + 2.0 * even);
}

// Odd sample count resolving oscillations up to 2 * omega_max over [0, t_max]
// with about eight points per period, never below `base`.
inline std::size_t samples_for_band(double omega_max, double t_max, std::size_t base = 2001) {
    const double needed = 2.6 * std::max(omega_max, 0.0) * t_max;
    std::size_t n = std::max<std::size_t>(base, static_cast<std::size_t>(std::ceil(needed)));
    if (n % 2 == 0) ++n;
    return n;
}

// Integrated squared trace distance of the two reduced density matrices:
// tr[diag(dn, -dn)]^2 = 2 dn^2, integrated over the shared horizon.
inline double error_measure(const Trajectory& traj_a, const Trajectory& traj_b) {
    if (!(traj_a.grid == traj_b.grid))
        throw std::invalid_argument("error measure: trajectories must share a grid");
    const std::size_t nt = traj_a.grid.n_samples();
    std::vector<double> integrand(nt);
    for (std::size_t j = 0; j < nt; ++j) {
        const double dn = traj_a.values[j] - traj_b.values[j];
        integrand[j] = 2.0 * dn * dn;
    }
    return simpson(integrand, traj_a.grid.step());
}

// Plain deletion of one mode; the removed weight is gone.
inline DiscreteBath remove_mode(const DiscreteBath& bath, std::size_t index) {
    if (index >= bath.size()) throw std::invalid_argument("remove mode: index out of range");
    std::vector<Mode> modes = bath.modes();
    modes.erase(modes.begin() + static_cast<std::ptrdiff_t>(index));
    return DiscreteBath(std::move(modes));
}

// Exploratory variant: the deleted mode's weight G_i^2 moves onto the two
// neighbours with linear-interpolation shares, preserving both the total
// weight and its first moment. Edge modes hand everything to their single
// neighbour.
inline DiscreteBath remove_mode_redistribute(const DiscreteBath& bath, std::size_t index) {
    if (index >= bath.size()) throw std::invalid_argument("remove mode: index out of range");
    std::vector<Mode> modes = bath.modes();
    const double removed_weight = modes[index].coupling * modes[index].coupling;
    const bool has_left = index > 0;
    const bool has_right = index + 1 < modes.size();
    const auto add_weight = [&](std::size_t i, double w) {
        modes[i].coupling = std::sqrt(modes[i].coupling * modes[i].coupling + w);
    };
    if (has_left && has_right) {
        const double span = modes[index + 1].omega - modes[index - 1].omega;
        const double share_left = (modes[index + 1].omega - modes[index].omega) / span;
        add_weight(index - 1, share_left * removed_weight);
        add_weight(index + 1, (1.0 - share_left) * removed_weight);
    } else if (has_left) {
        add_weight(index - 1, removed_weight);
    } else if (has_right) {
        add_weight(index + 1, removed_weight);
    }
    modes.erase(modes.begin() + static_cast<std::ptrdiff_t>(index));
    return DiscreteBath(std::move(modes));
}

// Influence of mode `index`: integrated squared change of the reduced density
// matrix when that single mode is taken out.
inline double influence_numeric(const DiscreteBath& bath, std::size_t index, const TimeGrid& grid,
                                bool redistribute = false) {
    const DiscreteBath reduced =
        redistribute ? remove_mode_redistribute(bath, index) : remove_mode(bath, index);
    const Trajectory full = propagate(bath, grid);
    const Trajectory without = propagate(reduced, grid);
    return error_measure(without, full);
}

} // namespace bathdisc
