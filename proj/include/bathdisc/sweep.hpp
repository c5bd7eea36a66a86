// sweep.hpp — convergence-study orchestration: mode-count sweeps per scheme,
// log-log slope fits, and the influence-versus-frequency tables.

#pragma once

#include <cmath>
#include <cstddef>
#include <future>
#include <span>
#include <stdexcept>
#include <vector>

#include "bathdisc/analytic.hpp"
#include "bathdisc/discretize.hpp"
#include "bathdisc/measures.hpp"
#include "bathdisc/propagate.hpp"

namespace bathdisc {

struct SweepRecord {
    DiscretizationScheme::Kind scheme = DiscretizationScheme::Kind::Linear;
    std::size_t mode_count = 0;  // realized, not targeted
    double epsilon = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Least-squares line through (log10 x, log10 y).
inline FitResult fit_loglog_xy(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 3)
        throw std::invalid_argument("fit: need at least three points");
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::invalid_argument("fit: log undefined for non-positive values");
        const double lx = std::log10(x[i]);
        const double ly = std::log10(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("fit: abscissae are degenerate");
    FitResult fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0;
    const double mean_y = sy / n;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ly = std::log10(y[i]);
        const double predicted = fit.slope * std::log10(x[i]) + fit.intercept;
        ss_res += (ly - predicted) * (ly - predicted);
        ss_tot += (ly - mean_y) * (ly - mean_y);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

inline FitResult fit_loglog(std::span<const SweepRecord> records) {
    std::vector<double> n(records.size());
    std::vector<double> eps(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        n[i] = static_cast<double>(records[i].mode_count);
        eps[i] = records[i].epsilon;
    }
    return fit_loglog_xy(n, eps);
}

// One sweep point: target a mode count, discretize, propagate, and measure
// the deviation from the continuum over [0, t_max]. The quadrature grid is
// widened beyond quad.n_samples whenever the bath band needs the resolution.
inline SweepRecord sweep_point(DiscretizationScheme::Kind kind, std::size_t target, double gamma,
                               double t_max, const QuadratureConfig& quad) {
    const auto scheme = scheme_for_mode_count(kind, target, t_max);
    const auto bath = discretize(scheme, SpectralDensity::flat(gamma));
    const TimeGrid grid(t_max, samples_for_band(bath.max_abs_omega(), t_max, quad.n_samples));
    const Trajectory traj = propagate(bath, grid);
    const Trajectory reference = continuum_trajectory(gamma, grid);
    return {kind, bath.size(), error_measure(traj, reference)};
}

// Sweep points are independent jobs; results are gathered in target order, so
// the output is deterministic regardless of scheduling.
inline std::vector<SweepRecord> run_sweep(DiscretizationScheme::Kind kind,
                                          std::span<const std::size_t> targets, double gamma,
                                          double t_max, const QuadratureConfig& quad = {}) {
    quad.validate();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 3) throw std::invalid_argument("sweep: every target must be at least 3");
        if (i > 0 && targets[i] <= targets[i - 1])
            throw std::invalid_argument("sweep: targets must be strictly ascending");
    }
    std::vector<std::future<SweepRecord>> jobs;
    jobs.reserve(targets.size());
    for (std::size_t target : targets)
        jobs.push_back(std::async(std::launch::async, sweep_point, kind, target, gamma, t_max,
                                  quad));
    std::vector<SweepRecord> records;
    records.reserve(targets.size());
    for (auto& job : jobs) records.push_back(job.get());
    return records;
}

struct InfluenceTableRow {
    double t_max = 0.0;
    double omega = 0.0;
    double influence = 0.0;
};

// Analytic influence tabulated over horizons and frequencies, covering the
// low-frequency plateau and the high-frequency tail.
inline std::vector<InfluenceTableRow> figure2_data(double gamma, double delta,
                                                   std::span<const double> t_values,
                                                   std::span<const double> omegas,
                                                   const QuadratureConfig& quad = {}) {
    quad.validate();
    double band = 0.0;
    for (double w : omegas) band = std::max(band, std::abs(w));
    std::vector<InfluenceTableRow> rows;
    rows.reserve(t_values.size() * omegas.size());
    for (double t_max : t_values) {
        QuadratureConfig resolved = quad;
        resolved.n_samples = samples_for_band(band, t_max, quad.n_samples);
        for (const auto& point : influence_scan(gamma, delta, t_max, omegas, resolved))
            rows.push_back({t_max, point.omega, point.influence});
    }
    return rows;
}

} // namespace bathdisc
