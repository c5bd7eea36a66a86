// analytic.hpp — closed-form references for the flat-density decay model:
// continuum decay, the removed-mode amplitude, its influence, and the
// band-cutoff error law.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "bathdisc/bath.hpp"
#include "bathdisc/measures.hpp"

namespace bathdisc {

// Continuum-limit occupation e^{-gamma t}.
inline double continuum_occupation(double gamma, double t) {
    if (t < 0.0) throw std::invalid_argument("continuum occupation: t must be non-negative");
    return std::exp(-gamma * t);
}

inline Trajectory continuum_trajectory(double gamma, const TimeGrid& grid) {
    std::vector<double> values(grid.n_samples());
    for (std::size_t j = 0; j < grid.n_samples(); ++j)
        values[j] = continuum_occupation(gamma, grid.time_at(j));
    return Trajectory(grid, std::move(values));
}

// One mode at `omega` removed from an infinite, evenly spaced band of
// spacing `delta`; its squared coupling is gamma*delta/2pi.
struct RemovedModeParams {
    double gamma = 1.0;
    double delta = 0.1;
    double omega = 0.0;

    RemovedModeParams(double gamma_, double delta_, double omega_)
        : gamma(gamma_), delta(delta_), omega(omega_) {
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("removed mode: gamma must be positive");
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw std::invalid_argument("removed mode: delta must be positive");
        if (!std::isfinite(omega))
            throw std::invalid_argument("removed mode: omega must be finite");
    }

    double coupling_squared() const noexcept { return gamma * delta / two_pi; }

    // the closed form holds up to the band recurrence
    double validity_horizon() const noexcept { return two_pi / delta; }
};

// System amplitude a(t) with the mode removed, via the two roots s+- of the
// memory-kernel characteristic polynomial. The square root takes the branch
// with non-negative real part; that choice is what makes a(0) = 1 and the
// zero-weight limit a(t) = e^{-gamma t / 2} come out right.
inline std::complex<double> removed_mode_amplitude(const RemovedModeParams& p, double t) {
    if (t < 0.0 || t > p.validity_horizon() * (1.0 + 1e-12))
        throw std::invalid_argument("removed mode: t outside the validity window [0, 2pi/delta]");
    const std::complex<double> i{0.0, 1.0};
    const std::complex<double> sigma = 0.25 * p.gamma * p.gamma + 4.0 * p.coupling_squared() -
                                       p.omega * p.omega - i * p.omega * p.gamma;
    std::complex<double> root = std::sqrt(sigma);
    if (root.real() < 0.0) root = -root;
    if (std::abs(root) < 1e-14 * (1.0 + std::abs(sigma)))
        throw std::runtime_error("confluent roots");
    const std::complex<double> mean = -0.5 * (0.5 * p.gamma + i * p.omega);
    const std::complex<double> s_plus = mean + 0.5 * root;
    const std::complex<double> s_minus = mean - 0.5 * root;
    return (s_plus + i * p.omega) / root * std::exp(s_plus * t) -
           (s_minus + i * p.omega) / root * std::exp(s_minus * t);
}

// Integrated squared change of the reduced density matrix due to the removal,
// 2 * int_0^T (|a|^2 - e^{-gamma t})^2 dt by Simpson quadrature.
inline double influence_analytic(const RemovedModeParams& p, double t_max,
                                 const QuadratureConfig& quad = {}) {
    quad.validate();
    if (!(t_max > 0.0) || t_max > p.validity_horizon() * (1.0 + 1e-12))
        throw std::invalid_argument("influence: horizon must lie in (0, 2pi/delta]");
    const TimeGrid grid(t_max, quad.n_samples);
    std::vector<double> integrand(grid.n_samples());
    for (std::size_t j = 0; j < grid.n_samples(); ++j) {
        const double t = grid.time_at(j);
        const double dn =
            std::norm(removed_mode_amplitude(p, t)) - continuum_occupation(p.gamma, t);
        integrand[j] = 2.0 * dn * dn;
    }
    return simpson(integrand, grid.step());
}

// Error of truncating the flat continuum band at omega_c, to leading order in
// 1/omega_c: (5 / 2 gamma) (gamma / pi omega_c)^2.
inline double cutoff_error(double gamma, double omega_c) {
    if (!(gamma > 0.0) || !(omega_c > 0.0))
        throw std::invalid_argument("cutoff error: gamma and omega_c must be positive");
    const double x = gamma / (std::numbers::pi * omega_c);
    return 2.5 / gamma * x * x;
}

struct InfluencePoint {
    double omega = 0.0;
    double influence = 0.0;
};

inline std::vector<InfluencePoint> influence_scan(double gamma, double delta, double t_max,
                                                  std::span<const double> omegas,
                                                  const QuadratureConfig& quad = {}) {
    std::vector<InfluencePoint> points;
    points.reserve(omegas.size());
    for (double w : omegas)
        points.push_back({w, influence_analytic(RemovedModeParams(gamma, delta, w), t_max, quad)});
    return points;
}

// Largest omega whose influence still reaches half the zero-frequency value,
// located by bisection on the continuous scan.
inline double plateau_half_width(double gamma, double delta, double t_max,
                                 const QuadratureConfig& quad = {}) {
    const double half = 0.5 * influence_analytic(RemovedModeParams(gamma, delta, 0.0), t_max, quad);
    const auto above = [&](double w) {
        return influence_analytic(RemovedModeParams(gamma, delta, w), t_max, quad) >= half;
    };
    double hi = gamma;
    while (above(hi)) {
        hi *= 2.0;
        if (hi > 1e6 * gamma) throw std::runtime_error("plateau width: no half crossing found");
    }
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (above(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace bathdisc
