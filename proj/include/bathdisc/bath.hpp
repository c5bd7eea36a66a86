// bath.hpp — spectral densities, discrete baths, time grids and trajectories
// shared by every other header.

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bathdisc {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Continuum coupling density J(omega). Flat is the only built-in kind; all
// consumers evaluate through operator() so further kinds can slot in.
class SpectralDensity {
public:
    enum class Kind { Flat };

    static SpectralDensity flat(double gamma) {
        if (!(gamma > 0.0) || !std::isfinite(gamma))
            throw std::invalid_argument("spectral density: gamma must be positive and finite");
        return SpectralDensity(Kind::Flat, gamma);
    }

    Kind kind() const noexcept { return kind_; }
    double gamma() const noexcept { return gamma_; }

    double operator()(double omega) const {
        if (!std::isfinite(omega))
            throw std::invalid_argument("spectral density: omega must be finite");
        switch (kind_) {
            case Kind::Flat: return gamma_ / two_pi;
        }
        throw std::logic_error("spectral density: unhandled kind");
    }

private:
    SpectralDensity(Kind kind, double gamma) : kind_(kind), gamma_(gamma) {}

    Kind kind_;
    double gamma_;
};

struct Mode {
    double omega = 0.0;     // detuning from the system line; may be negative
    double coupling = 0.0;  // non-negative amplitude G_i

    friend bool operator==(const Mode&, const Mode&) = default;
};

// Finite mode set {(omega_i, G_i)} with strictly ascending frequencies.
// Immutable after construction.
class DiscreteBath {
public:
    DiscreteBath() = default;

    explicit DiscreteBath(std::vector<Mode> modes) : modes_(std::move(modes)) {
        for (std::size_t i = 0; i < modes_.size(); ++i) {
            const Mode& m = modes_[i];
            if (!std::isfinite(m.omega) || !std::isfinite(m.coupling))
                throw std::invalid_argument("bath: modes must be finite");
            if (m.coupling < 0.0)
                throw std::invalid_argument("bath: couplings must be non-negative");
            if (i > 0 && !(modes_[i - 1].omega < m.omega))
                throw std::invalid_argument("bath: frequencies must be strictly increasing");
        }
    }

    const std::vector<Mode>& modes() const noexcept { return modes_; }
    std::size_t size() const noexcept { return modes_.size(); }
    bool empty() const noexcept { return modes_.empty(); }
    const Mode& operator[](std::size_t i) const { return modes_.at(i); }

    // Total coupling weight sum_i G_i^2; equals the band integral of J for
    // discretizer output (see discretize.hpp).
    double weight() const noexcept {
        double w = 0.0;
        for (const Mode& m : modes_) w += m.coupling * m.coupling;
        return w;
    }

    double max_abs_omega() const noexcept {
        double w = 0.0;
        for (const Mode& m : modes_) w = std::max(w, std::abs(m.omega));
        return w;
    }

    friend bool operator==(const DiscreteBath&, const DiscreteBath&) = default;

private:
    std::vector<Mode> modes_;
};

inline double bath_weight(const DiscreteBath& bath) noexcept { return bath.weight(); }

// Uniform time grid on [0, t_max] including both endpoints.
class TimeGrid {
public:
    TimeGrid(double t_max, std::size_t n_samples) : t_max_(t_max), n_samples_(n_samples) {
        if (!(t_max > 0.0) || !std::isfinite(t_max))
            throw std::invalid_argument("time grid: t_max must be positive and finite");
        if (n_samples < 2)
            throw std::invalid_argument("time grid: need at least two samples");
    }

    double t_max() const noexcept { return t_max_; }
    std::size_t n_samples() const noexcept { return n_samples_; }
    double step() const noexcept { return t_max_ / static_cast<double>(n_samples_ - 1); }

    double time_at(std::size_t j) const {
        if (j >= n_samples_) throw std::out_of_range("time grid: sample index out of range");
        return j + 1 == n_samples_ ? t_max_ : step() * static_cast<double>(j);
    }

    std::vector<double> times() const {
        std::vector<double> t(n_samples_);
        for (std::size_t j = 0; j < n_samples_; ++j) t[j] = time_at(j);
        return t;
    }

    friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

private:
    double t_max_;
    std::size_t n_samples_;
};

// System occupation n(t_j) sampled on a grid.
struct Trajectory {
    TimeGrid grid;
    std::vector<double> values;

    Trajectory(TimeGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n_samples())
            throw std::invalid_argument("trajectory: one value per grid sample required");
    }
};

} // namespace bathdisc
