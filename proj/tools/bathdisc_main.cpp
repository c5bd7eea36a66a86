// bathdisc — finite discrete-mode representations of continuum environments.
//
// Subcommands: discretize, propagate, influence, sweep, fit. All file output
// is CSV with 17-significant-digit floats. Exit codes: 0 success, 1 usage
// error, 2 numerical failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bathdisc/analytic.hpp"
#include "bathdisc/bath.hpp"
#include "bathdisc/discretize.hpp"
#include "bathdisc/io.hpp"
#include "bathdisc/measures.hpp"
#include "bathdisc/propagate.hpp"
#include "bathdisc/sweep.hpp"

namespace {

using bathdisc::DiscretizationScheme;

DiscretizationScheme scheme_from_flags(const std::string& name, double t_max, double omega_c,
                                       double d, double d1) {
    switch (bathdisc::scheme_kind_from_name(name)) {
        case DiscretizationScheme::Kind::Linear:
            if (!(omega_c > 0.0))
                throw std::invalid_argument("linear scheme requires --omega-c > 0");
            return DiscretizationScheme::linear(omega_c, t_max);
        case DiscretizationScheme::Kind::Influence:
            if (!(d > 0.0)) throw std::invalid_argument("influence scheme requires --d > 0");
            return DiscretizationScheme::influence(d, t_max);
        case DiscretizationScheme::Kind::LinearRamp:
            if (!(d1 > 0.0)) throw std::invalid_argument("linear-ramp scheme requires --d1 > 0");
            return DiscretizationScheme::linear_ramp(d1, t_max);
        case DiscretizationScheme::Kind::Generalized:
            if (!(d > 0.0)) throw std::invalid_argument("generalized scheme requires --d > 0");
            return DiscretizationScheme::generalized(d, t_max);
    }
    throw std::invalid_argument("unknown scheme: " + name);
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) throw std::invalid_argument("need at least one point");
    std::vector<double> points(count);
    if (count == 1) {
        points[0] = lo;
        return points;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        points[i] = i + 1 == count ? hi : lo + step * static_cast<double>(i);
    return points;
}

// Numeric influence scan: a dense evenly spaced bath wide enough that the
// band edge stays well away from the scanned frequencies; each scan point
// removes the mode nearest to it.
std::vector<bathdisc::InfluencePoint> numeric_influence_scan(double gamma, double delta,
                                                             double t_max,
                                                             const std::vector<double>& omegas,
                                                             bool redistribute) {
    double scan_band = 0.0;
    for (double w : omegas) scan_band = std::max(scan_band, std::abs(w));
    const double omega_c = 1.25 * scan_band + 10.0 * gamma;
    const auto bath = bathdisc::discretize(
        DiscretizationScheme::linear(omega_c, bathdisc::two_pi / delta),
        bathdisc::SpectralDensity::flat(gamma));
    const bathdisc::TimeGrid grid(t_max,
                                  bathdisc::samples_for_band(bath.max_abs_omega(), t_max));
    const bathdisc::Trajectory full = bathdisc::propagate(bath, grid);

    std::vector<bathdisc::InfluencePoint> points;
    points.reserve(omegas.size());
    for (double w : omegas) {
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < bath.size(); ++i)
            if (std::abs(bath[i].omega - w) < std::abs(bath[nearest].omega - w)) nearest = i;
        const auto reduced = redistribute ? bathdisc::remove_mode_redistribute(bath, nearest)
                                          : bathdisc::remove_mode(bath, nearest);
        const bathdisc::Trajectory without = bathdisc::propagate(reduced, grid);
        points.push_back({bath[nearest].omega, bathdisc::error_measure(without, full)});
    }
    return points;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite discrete-mode representations of continuum environments"};
    app.require_subcommand(1);

    // discretize
    auto* discretize_cmd = app.add_subcommand("discretize", "emit a bath CSV for a scheme");
    std::string scheme_name = "linear";
    double gamma = 1.0, t_max = 10.0, omega_c = 0.0, d = 0.0, d1 = 0.0;
    std::string out_path;
    discretize_cmd->add_option("--scheme", scheme_name, "linear|influence|linear-ramp|generalized")
        ->required();
    discretize_cmd->add_option("--gamma", gamma, "flat density decay rate")->required();
    discretize_cmd->add_option("--t-max", t_max, "simulation horizon")->required();
    discretize_cmd->add_option("--omega-c", omega_c, "band edge (linear scheme)");
    discretize_cmd->add_option("--d", d, "curvature parameter (influence/generalized)");
    discretize_cmd->add_option("--d1", d1, "slope parameter (linear-ramp)");
    discretize_cmd->add_option("--out", out_path, "output CSV")->required();

    // propagate
    auto* propagate_cmd = app.add_subcommand("propagate", "evolve n(t) for a bath CSV");
    std::string bath_path;
    std::size_t samples = 2001;
    propagate_cmd->add_option("--bath", bath_path, "bath CSV")->required();
    propagate_cmd->add_option("--t-max", t_max, "simulation horizon")->required();
    propagate_cmd->add_option("--samples", samples, "grid samples incl. endpoints")->required();
    propagate_cmd->add_option("--out", out_path, "output CSV")->required();

    // influence
    auto* influence_cmd = app.add_subcommand("influence", "single-mode influence vs frequency");
    std::string influence_mode = "analytic";
    double delta = 0.1, omega_min = 0.0, omega_max = 1.0;
    std::size_t points = 1;
    bool redistribute = false;
    influence_cmd->add_option("--mode", influence_mode, "analytic|numeric")->required();
    influence_cmd->add_option("--gamma", gamma, "flat density decay rate")->required();
    influence_cmd->add_option("--delta", delta, "even mode spacing")->required();
    influence_cmd->add_option("--t-max", t_max, "integration horizon")->required();
    influence_cmd->add_option("--omega-min", omega_min, "scan start")->required();
    influence_cmd->add_option("--omega-max", omega_max, "scan end")->required();
    influence_cmd->add_option("--points", points, "scan points")->required();
    influence_cmd->add_flag("--redistribute", redistribute,
                            "move removed weight onto neighbours (numeric mode)");
    influence_cmd->add_option("--out", out_path, "output CSV")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "error vs mode count for a scheme");
    std::string targets_text;
    sweep_cmd->add_option("--scheme", scheme_name, "linear|influence")->required();
    sweep_cmd->add_option("--gamma", gamma, "flat density decay rate")->required();
    sweep_cmd->add_option("--t-max", t_max, "simulation horizon")->required();
    sweep_cmd->add_option("--targets", targets_text, "comma-separated mode counts")->required();
    sweep_cmd->add_option("--out", out_path, "output CSV")->required();

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "log-log power-law fit of a sweep CSV");
    std::string in_path;
    fit_cmd->add_option("--in", in_path, "sweep CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    }

    try {
        if (discretize_cmd->parsed()) {
            const auto scheme = scheme_from_flags(scheme_name, t_max, omega_c, d, d1);
            const auto bath = bathdisc::discretize(scheme, bathdisc::SpectralDensity::flat(gamma));
            bathdisc::write_bath_csv(out_path, bath);
        } else if (propagate_cmd->parsed()) {
            const auto bath = bathdisc::read_bath_csv(bath_path);
            const bathdisc::Trajectory traj =
                bathdisc::propagate(bath, bathdisc::TimeGrid(t_max, samples));
            bathdisc::write_trajectory_csv(out_path, traj);
        } else if (influence_cmd->parsed()) {
            const auto omegas = linspace(omega_min, omega_max, points);
            std::vector<bathdisc::InfluencePoint> scan;
            if (influence_mode == "analytic") {
                bathdisc::QuadratureConfig quad;
                quad.n_samples = bathdisc::samples_for_band(
                    std::max(std::abs(omega_min), std::abs(omega_max)), t_max);
                scan = bathdisc::influence_scan(gamma, delta, t_max, omegas, quad);
            } else if (influence_mode == "numeric") {
                scan = numeric_influence_scan(gamma, delta, t_max, omegas, redistribute);
            } else {
                throw std::invalid_argument("influence --mode must be analytic or numeric");
            }
            bathdisc::write_influence_csv(out_path, scan);
        } else if (sweep_cmd->parsed()) {
            std::vector<std::size_t> targets;
            for (const auto& field : bathdisc::detail::split_csv_line(targets_text)) {
                const double value = bathdisc::detail::parse_double(field, "sweep target");
                if (value < 1.0 || value != std::floor(value))
                    throw std::invalid_argument("sweep targets must be positive integers");
                targets.push_back(static_cast<std::size_t>(value));
            }
            const auto records = bathdisc::run_sweep(bathdisc::scheme_kind_from_name(scheme_name),
                                                     targets, gamma, t_max);
            bathdisc::write_sweep_csv(out_path, records);
        } else if (fit_cmd->parsed()) {
            const auto records = bathdisc::read_sweep_csv(in_path);
            const auto fit = bathdisc::fit_loglog(records);
            std::printf("slope=%.10g intercept=%.10g r2=%.10g\n", fit.slope, fit.intercept,
                        fit.r_squared);
        }
    } catch (const std::invalid_argument& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 1;
    } catch (const std::exception& error) {
        std::fprintf(stderr, "numerical failure: %s\n", error.what());
        return 2;
    }
    return 0;
}
