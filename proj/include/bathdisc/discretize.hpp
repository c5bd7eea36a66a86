// discretize.hpp — mappings J(omega) -> {(omega_i, G_i)}: evenly spaced modes
// and the frequency-dependent spacings, with band cutoff logic.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bathdisc/bath.hpp"

namespace bathdisc {

struct DiscretizationScheme {
    enum class Kind { Linear, Influence, LinearRamp, Generalized };

    Kind kind = Kind::Linear;
    double t_max = 0.0;        // horizon fixing the base spacing
    double omega_c = 0.0;      // Linear band edge
    double d = 0.0;            // curvature parameter (Influence, Generalized)
    double d1 = 0.0;           // dimensionless slope (LinearRamp)
    double cutoff_mult = 1.0;  // band edge = cutoff_mult / d for curved spacings

    static DiscretizationScheme linear(double omega_c, double t_max) {
        require_horizon(t_max);
        if (!(omega_c > 0.0) || !std::isfinite(omega_c))
            throw std::invalid_argument("linear scheme: omega_c must be positive");
        DiscretizationScheme s;
        s.kind = Kind::Linear;
        s.t_max = t_max;
        s.omega_c = omega_c;
        return s;
    }

    static DiscretizationScheme influence(double d, double t_max, double cutoff_mult = 1.0) {
        require_horizon(t_max);
        require_positive(d, "influence scheme: d must be positive");
        require_positive(cutoff_mult, "influence scheme: cutoff multiplier must be positive");
        DiscretizationScheme s;
        s.kind = Kind::Influence;
        s.t_max = t_max;
        s.d = d;
        s.cutoff_mult = cutoff_mult;
        return s;
    }

    static DiscretizationScheme linear_ramp(double d1, double t_max) {
        require_horizon(t_max);
        require_positive(d1, "linear-ramp scheme: d1 must be positive");
        DiscretizationScheme s;
        s.kind = Kind::LinearRamp;
        s.t_max = t_max;
        s.d1 = d1;
        return s;
    }

    static DiscretizationScheme generalized(double d, double t_max, double cutoff_mult = 1.0) {
        require_horizon(t_max);
        require_positive(d, "generalized scheme: d must be positive");
        require_positive(cutoff_mult, "generalized scheme: cutoff multiplier must be positive");
        DiscretizationScheme s;
        s.kind = Kind::Generalized;
        s.t_max = t_max;
        s.d = d;
        s.cutoff_mult = cutoff_mult;
        return s;
    }

    // Evenly spaced modes may sit 2pi/T apart before recurrences enter the
    // horizon; the curved spacings start from pi/T so that the low-frequency
    // plateau keeps a factor-two margin.
    double base_spacing() const noexcept {
        return kind == Kind::Linear ? two_pi / t_max : std::numbers::pi / t_max;
    }

    double cutoff() const {
        switch (kind) {
            case Kind::Linear: return omega_c;
            case Kind::Influence:
            case Kind::Generalized: return cutoff_mult / d;
            case Kind::LinearRamp: {
                // the count integral diverges logarithmically, so cap the band
                const double d0 = base_spacing();
                return std::min(d0 * std::exp(1.0 / d1), 1e4 * d0);
            }
        }
        throw std::logic_error("scheme: unhandled kind");
    }

private:
    static void require_horizon(double t_max) {
        if (!(t_max > 0.0) || !std::isfinite(t_max))
            throw std::invalid_argument("scheme: t_max must be positive and finite");
    }
    static void require_positive(double v, const char* msg) {
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(msg);
    }
};

// Local mode spacing Delta(omega) of a scheme.
inline double spacing_at(const DiscretizationScheme& scheme, const SpectralDensity& density,
                         double omega) {
    const double d0 = scheme.base_spacing();
    switch (scheme.kind) {
        case DiscretizationScheme::Kind::Linear:
            return d0;
        case DiscretizationScheme::Kind::Influence:
            return d0 + scheme.d * omega * omega;
        case DiscretizationScheme::Kind::LinearRamp:
            return d0 + scheme.d1 * std::abs(omega);
        case DiscretizationScheme::Kind::Generalized: {
            const double j = density(omega);
            if (!(j > 0.0))
                throw std::invalid_argument("density vanishes; generalized spacing undefined");
            return d0 + scheme.d * omega * omega / j;
        }
    }
    throw std::logic_error("scheme: unhandled kind");
}

namespace detail {

// Smallest s solving s = Delta(omega + s/2): the step whose realized spacing
// equals the spacing evaluated at the pair midpoint, which tracks the count
// integral \int d omega / Delta to second order. Returns nullopt once the
// spacing grows faster than the step can keep up with (no root); generation
// stops there. Assumes Delta is non-decreasing in omega for omega >= 0.
inline std::optional<double> midpoint_step(const DiscretizationScheme& scheme,
                                           const SpectralDensity& density, double omega) {
    const auto overshoot = [&](double s) {
        return s - spacing_at(scheme, density, omega + 0.5 * s);
    };
    double hi = spacing_at(scheme, density, omega);
    if (!(hi > 0.0)) throw std::logic_error("midpoint step: spacing must be positive");
    const double cap =
        4.0 * (std::max(scheme.cutoff() - omega, 0.0) + hi + scheme.base_spacing());
    while (overshoot(hi) < 0.0) {
        hi *= 2.0;
        if (hi > cap) return std::nullopt;
    }
    double lo = 0.5 * hi;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (overshoot(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Positive-frequency placement: forward midpoint recurrence from zero kept
// inside the band edge.
inline std::vector<double> positive_frequencies(const DiscretizationScheme& scheme,
                                                const SpectralDensity& density) {
    std::vector<double> freqs{0.0};
    const double edge = scheme.cutoff();
    while (true) {
        const auto step = midpoint_step(scheme, density, freqs.back());
        if (!step || freqs.back() + *step > edge) break;
        freqs.push_back(freqs.back() + *step);
        if (freqs.size() > 20'000'000)
            throw std::runtime_error("discretize: mode count exploded; check scheme parameters");
    }
    return freqs;
}

} // namespace detail

// Maps a spectral density to a finite bath under the given scheme. Couplings
// carry Voronoi widths (half the gap to each neighbour, half a local spacing
// outward at the band edges) so the total weight telescopes to the integral
// of J over the covered band exactly.
inline DiscreteBath discretize(const DiscretizationScheme& scheme, const SpectralDensity& density) {
    std::vector<double> omegas;

    if (scheme.kind == DiscretizationScheme::Kind::Linear) {
        const double delta = scheme.base_spacing();
        const long reach = static_cast<long>(std::floor(scheme.omega_c / delta + 1e-9));
        omegas.reserve(static_cast<std::size_t>(2 * reach + 1));
        for (long k = -reach; k <= reach; ++k)
            omegas.push_back(static_cast<double>(k) * delta);
        if (omegas.size() < 3) throw std::invalid_argument("band too narrow");

        std::vector<Mode> modes;
        modes.reserve(omegas.size());
        for (double w : omegas) modes.push_back({w, std::sqrt(density(w) * delta)});
        return DiscreteBath(std::move(modes));
    }

    const std::vector<double> pos = detail::positive_frequencies(scheme, density);
    omegas.reserve(2 * pos.size() - 1);
    for (std::size_t i = pos.size(); i-- > 1;) omegas.push_back(-pos[i]);
    omegas.insert(omegas.end(), pos.begin(), pos.end());
    if (omegas.size() < 3) throw std::invalid_argument("band too narrow");

    std::vector<Mode> modes;
    modes.reserve(omegas.size());
    const std::size_t n = omegas.size();
    for (std::size_t i = 0; i < n; ++i) {
        double width;
        if (i == 0)
            width = 0.5 * (omegas[1] - omegas[0]) +
                    0.5 * spacing_at(scheme, density, std::abs(omegas[0]));
        else if (i + 1 == n)
            width = 0.5 * (omegas[i] - omegas[i - 1]) +
                    0.5 * spacing_at(scheme, density, std::abs(omegas[i]));
        else
            width = 0.5 * (omegas[i + 1] - omegas[i - 1]);
        modes.push_back({omegas[i], std::sqrt(density(omegas[i]) * width)});
    }
    return DiscreteBath(std::move(modes));
}

// Smooth estimate of the influence-spacing mode count between -omega_c and
// omega_c: \int d omega / (base + d omega^2).
inline double influence_count_integral(double base_spacing, double d, double omega_c) {
    return 2.0 / std::sqrt(base_spacing * d) * std::atan(omega_c * std::sqrt(d / base_spacing));
}

namespace detail {

inline std::size_t realized_influence_count(double d, double t_max, double cutoff_mult) {
    const auto scheme = DiscretizationScheme::influence(d, t_max, cutoff_mult);
    const auto density = SpectralDensity::flat(1.0);  // spacing is density-independent here
    return 2 * positive_frequencies(scheme, density).size() - 1;
}

} // namespace detail

// Inverts the mode count: returns a scheme whose discretized bath realizes
// target_n modes within +/-5%. Curved counts are always odd (a zero mode plus
// mirrored pairs), so small even targets are rejected as unsatisfiable.
inline DiscretizationScheme scheme_for_mode_count(DiscretizationScheme::Kind kind,
                                                  std::size_t target_n, double t_max,
                                                  double cutoff_mult = 1.0) {
    if (target_n < 3) throw std::invalid_argument("mode count target must be at least 3");
    const double tol = 0.05 * static_cast<double>(target_n);

    if (kind == DiscretizationScheme::Kind::Linear) {
        const double delta = two_pi / t_max;
        const double omega_c = 0.5 * static_cast<double>(target_n - 1) * delta;
        const auto scheme = DiscretizationScheme::linear(omega_c, t_max);
        const double realized =
            2.0 * std::floor(omega_c / delta + 1e-9) + 1.0;
        if (std::abs(realized - static_cast<double>(target_n)) > tol)
            throw std::invalid_argument("mode count target unsatisfiable for linear scheme");
        return scheme;
    }

    if (kind != DiscretizationScheme::Kind::Influence)
        throw std::invalid_argument("mode count targeting supports linear and influence schemes");

    const double base = std::numbers::pi / t_max;
    double lo = 1e-12;                               // very fine spacing, huge count
    double hi = 2.0 * (1.0 + cutoff_mult) / base;    // band collapses, single mode
    if (detail::realized_influence_count(lo, t_max, cutoff_mult) < target_n)
        throw std::invalid_argument("mode count target unsatisfiable for influence scheme");
    while (detail::realized_influence_count(hi, t_max, cutoff_mult) >= target_n) hi *= 2.0;
    for (int i = 0; i < 90; ++i) {
        const double mid = std::sqrt(lo * hi);
        (detail::realized_influence_count(mid, t_max, cutoff_mult) >= target_n ? lo : hi) = mid;
    }

    const auto count_lo = detail::realized_influence_count(lo, t_max, cutoff_mult);
    const auto count_hi = detail::realized_influence_count(hi, t_max, cutoff_mult);
    const auto dist = [&](std::size_t c) {
        return std::abs(static_cast<double>(c) - static_cast<double>(target_n));
    };
    const double chosen = dist(count_lo) <= dist(count_hi) ? lo : hi;
    if (std::min(dist(count_lo), dist(count_hi)) > tol)
        throw std::invalid_argument("mode count target unsatisfiable for influence scheme");
    return DiscretizationScheme::influence(chosen, t_max, cutoff_mult);
}

inline const char* scheme_name(DiscretizationScheme::Kind kind) {
    switch (kind) {
        case DiscretizationScheme::Kind::Linear: return "linear";
        case DiscretizationScheme::Kind::Influence: return "influence";
        case DiscretizationScheme::Kind::LinearRamp: return "linear-ramp";
        case DiscretizationScheme::Kind::Generalized: return "generalized";
    }
    throw std::logic_error("scheme: unhandled kind");
}

inline DiscretizationScheme::Kind scheme_kind_from_name(const std::string& name) {
    if (name == "linear") return DiscretizationScheme::Kind::Linear;
    if (name == "influence") return DiscretizationScheme::Kind::Influence;
    if (name == "linear-ramp") return DiscretizationScheme::Kind::LinearRamp;
    if (name == "generalized") return DiscretizationScheme::Kind::Generalized;
    throw std::invalid_argument("unknown scheme: " + name);
}

} // namespace bathdisc
