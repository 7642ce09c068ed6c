#pragma once

// Ammonia inversion-doublet Ramsey interferometer: a pi/2 pulse at the field
// region entrance, free flight between the magnet poles, a second pi/2 pulse
// at the exit, then state-selective detection.
//
// Pulses are instantaneous resonant rotations at the 23 GHz inversion
// splitting; free evolution is computed in the rotating frame, so only the
// accumulated phase phi = d_a B L / hbar c (plus an optional readout detuning
// phase delta T) appears. Both doublet states are stable, so the composed
// pulse-evolution-pulse propagator is exactly unitary. With ideal pulses the
// detected population is (1 + cos phi) / 2 with contrast 1; pulse-area errors
// reduce the contrast, computed from the explicit 2x2 propagator composition
// rather than a closed-form shortcut.

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "dualphase/constants.hpp"

namespace dualphase {

struct RamseyParams {
    double d_a;      // ammonia dipole moment, esu cm
    double v;        // beam speed, cm/s (bookkeeping only; phi depends on B, L)
    double L;        // field region length, cm
    double B;        // G
    double pulse_area_error = 0.0;       // fractional deviation from pi/2
    double readout_detuning_phase = 0.0; // extra phase delta * T, rad
    PhysicalConstants constants = default_constants();

    void validate() const {
        if (d_a <= 0.0 || v <= 0.0 || L <= 0.0 || B < 0.0)
            throw std::invalid_argument("RamseyParams: need d_a, v, L > 0 and B >= 0");
        constants.validate();
    }
};

inline double ammonia_hmw_phase(double d_a, double B, double L, const PhysicalConstants& k) {
    if (d_a < 0.0 || B < 0.0 || L < 0.0)
        throw std::invalid_argument("ammonia_hmw_phase: inputs must be non-negative");
    return d_a * B * L / k.hbar_c();
}

namespace detail {

using Mat2c = std::array<std::complex<double>, 4>; // row-major 2x2

inline Mat2c matmul(const Mat2c& a, const Mat2c& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Resonant pulse of area theta: real rotation in the doublet basis, chosen so
// a pi/2 pulse maps the lower state to the equal superposition (1, 1)/sqrt(2).
inline Mat2c pulse_propagator(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    return {std::complex<double>{c, 0}, std::complex<double>{-s, 0},
            std::complex<double>{s, 0}, std::complex<double>{c, 0}};
}

// Rotating-frame free evolution: relative phase phi between the doublet states.
inline Mat2c free_propagator(double phi) {
    return {std::exp(std::complex<double>{0, -0.5 * phi}), {0, 0},
            {0, 0}, std::exp(std::complex<double>{0, +0.5 * phi})};
}

inline Mat2c ramsey_propagator(double phi, double pulse_area_error) {
    const double theta = 0.5 * M_PI * (1.0 + pulse_area_error);
    return matmul(pulse_propagator(theta), matmul(free_propagator(phi), pulse_propagator(theta)));
}

} // namespace detail

// Upper-doublet population detected after the two-pulse sequence, starting
// from the lower doublet state. Always in [0, 1].
inline double ramsey_fringe(const RamseyParams& p) {
    p.validate();
    const double phi = ammonia_hmw_phase(p.d_a, p.B, p.L, p.constants) + p.readout_detuning_phase;
    const detail::Mat2c u = detail::ramsey_propagator(phi, p.pulse_area_error);
    return std::norm(u[2]); // |<upper| U |lower>|^2
}

struct FringeRow {
    double B;          // G
    double phi;        // rad (HMW phase only, excluding readout detuning)
    double population; // detected upper-state fraction
};

inline std::vector<FringeRow> scan_fringes(const RamseyParams& base, std::span<const double> b_grid) {
    base.validate();
    std::vector<FringeRow> rows;
    rows.reserve(b_grid.size());
    for (double b : b_grid) {
        RamseyParams p = base;
        p.B = b;
        rows.push_back({b, ammonia_hmw_phase(p.d_a, b, p.L, p.constants), ramsey_fringe(p)});
    }
    return rows;
}

} // namespace dualphase
