// propagate.hpp — exact single-excitation dynamics of the decay Hamiltonian
// for a finite bath: star (arrowhead) matrix, spectral evolution, and a
// direct time-stepping oracle.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bathdisc/bath.hpp"
#include "bathdisc/detail/taylor_ode.hpp"

namespace bathdisc {

// (N+1)x(N+1) arrowhead: system amplitude in slot 0 at zero detuning (the
// conserved frequency term is removed), bath frequencies on the diagonal,
// couplings along the first row and column.
inline Eigen::MatrixXd build_star(const DiscreteBath& bath) {
    const auto dim = static_cast<Eigen::Index>(bath.size() + 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 1; k < dim; ++k) {
        const Mode& mode = bath.modes()[static_cast<std::size_t>(k - 1)];
        h(k, k) = mode.omega;
        h(0, k) = mode.coupling;
        h(k, 0) = mode.coupling;
    }
    return h;
}

// Spectral data of the star matrix reduced to what the system sees:
// eigenvalues and the squared system overlap of each eigenvector.
struct EigenSystem {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::VectorXd weights;      // p_j = |<system|v_j>|^2
};

inline EigenSystem diagonalize_star(const DiscreteBath& bath) {
    const Eigen::MatrixXd h = build_star(bath);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge on star matrix of dimension " +
                                 std::to_string(h.rows()));
    EigenSystem sys{solver.eigenvalues(),
                    solver.eigenvectors().row(0).transpose().array().square()};
    if (std::abs(sys.weights.sum() - 1.0) > 1e-10)
        throw std::runtime_error("eigenweights lost completeness on star matrix of dimension " +
                                 std::to_string(h.rows()));
    return sys;
}

namespace detail {

// n(t_j) = |sum_m p_m exp(-i lambda_m t_j)|^2 on a uniform grid. Each
// eigenvalue advances by phase rotation, re-synchronized periodically so
// accumulated rounding stays near machine precision.
inline std::vector<double> occupation_from_spectrum(const EigenSystem& sys, const TimeGrid& grid) {
    const std::size_t nt = grid.n_samples();
    std::vector<std::complex<double>> amplitude(nt, {0.0, 0.0});
    const double h = grid.step();
    constexpr std::size_t resync = 4096;

    for (Eigen::Index m = 0; m < sys.eigenvalues.size(); ++m) {
        const double lambda = sys.eigenvalues[m];
        const double p = sys.weights[m];
        if (p == 0.0) continue;
        const std::complex<double> rotation = std::polar(1.0, -lambda * h);
        std::complex<double> phase{1.0, 0.0};
        for (std::size_t j = 0; j < nt; ++j) {
            if (j % resync == 0) phase = std::polar(1.0, -lambda * grid.time_at(j));
            amplitude[j] += p * phase;
            phase *= rotation;
        }
    }

    std::vector<double> values(nt);
    for (std::size_t j = 0; j < nt; ++j)
        values[j] = std::clamp(std::norm(amplitude[j]), 0.0, 1.0);
    return values;
}

} // namespace detail

// System occupation n(t) from one diagonalization, O(N^3 + N n_t).
inline Trajectory propagate(const DiscreteBath& bath, const TimeGrid& grid) {
    if (bath.empty()) {
        // decoupled system keeps its excitation
        return Trajectory(grid, std::vector<double>(grid.n_samples(), 1.0));
    }
    return Trajectory(grid, detail::occupation_from_spectrum(diagonalize_star(bath), grid));
}

// rho(t_j) = diag[n, 1 - n]; the trace is exactly one.
inline Eigen::Matrix2d reduced_density(const Trajectory& traj, std::size_t j) {
    const double n = traj.values.at(j);
    Eigen::Matrix2d rho = Eigen::Matrix2d::Zero();
    rho(0, 0) = n;
    rho(1, 1) = 1.0 - n;
    return rho;
}

// Independent verification path: integrates the amplitude equations
// i c' = H c directly with high-order explicit stepping, never touching the
// spectral decomposition. The grid must resolve the band.
inline Trajectory propagate_ode_oracle(const DiscreteBath& bath, const TimeGrid& grid) {
    const double band = bath.max_abs_omega();
    if (!(grid.step() * band < 0.1))
        throw std::invalid_argument("ode oracle: grid step too large for the bath band");

    const Eigen::MatrixXcd h = build_star(bath).cast<std::complex<double>>();
    const double norm_bound = band + std::sqrt(bath.weight()) + 1e-12;
    const std::complex<double> minus_i{0.0, -1.0};
    const auto generator = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
        return minus_i * (h * v);
    };

    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(h.rows());
    state[0] = 1.0;
    std::vector<double> values(grid.n_samples());
    values[0] = 1.0;
    for (std::size_t j = 1; j < grid.n_samples(); ++j) {
        detail::taylor_advance(generator, norm_bound, grid.step(), state);
        values[j] = std::clamp(std::norm(state[0]), 0.0, 1.0);
    }
    return Trajectory(grid, std::move(values));
}

} // namespace bathdisc
