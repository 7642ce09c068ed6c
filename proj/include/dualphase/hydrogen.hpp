#pragma once

// Metastable 2s hydrogen beam through a transverse magnetic field region:
// motional Stark eigensystem, 2s <-> 2p two-level dynamics with 2p decay,
// field-induced quench rate, and transmission scans.
//
// In the co-moving frame the beam sees E' = v B / c, which mixes the
// degenerate 2s/2p (m = 0) pair linearly:
//
//   shifts      +- 3 a_B e E'
//   eigenstates (|200> +- |210>) / sqrt(2)
//   phi_HMW   = 3 a_B e B L / hbar c     (~ 0.241 B L for B in G, L in cm)
//   Omega     = 3 a_B e v B / hbar c
//
// Model note: the quench rate used for transmission is the hyperfine-resolved
// field-induced rate
//
//   gamma = (3^10 / 2^8) (1/alpha^3) (a_B^3 / hbar) (v B / c)^2
//
// (~ 92.6 B^2 s^-1 at v = 1e6 cm/s). The naive degenerate two-level
// adiabatic-elimination rate 4 Omega^2 / Gamma_2p is ~ 4x larger
// (~ 372 B^2); the two models answer different questions and are kept
// separate on purpose. evolve_two_level drives the bare two-level system,
// quench_rate/transmission use the formula above.
//
// Second model note: at v = 1e6 cm/s a 2p atom travels v tau_2p ~ 16 um
// before decaying; that length scale is what derived quantities use.

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "dualphase/constants.hpp"
#include "dualphase/errors.hpp"

namespace dualphase {

struct StarkEigensystem {
    double shift_plus;  // erg
    double shift_minus; // erg, = -shift_plus
    std::complex<double> state_plus[2];  // amplitudes over (|200>, |210>)
    std::complex<double> state_minus[2];
};

// Linear Stark eigensystem of the degenerate (|200>, |210>) pair in a field
// E' (statvolt/cm). The E' = 0 limit is degenerate; the same eigenvector
// convention is returned there.
inline StarkEigensystem stark_eigensystem(double e_prime, const PhysicalConstants& k) {
    if (e_prime < 0.0)
        throw std::invalid_argument("stark_eigensystem: E' must be >= 0");
    const double shift = 3.0 * k.a_bohr * k.e_charge * e_prime;
    const double r = 1.0 / std::sqrt(2.0);
    StarkEigensystem s{shift, -shift, {r, r}, {r, -r}};
    return s;
}

inline double hmw_phase_hydrogen(double B, double L, const PhysicalConstants& k) {
    if (B < 0.0 || L <= 0.0)
        throw std::invalid_argument("hmw_phase_hydrogen: need B >= 0, L > 0");
    return 3.0 * k.a_bohr * k.e_charge * B * L / k.hbar_c();
}

// 2s <-> 2p mixing (angular) frequency for a beam of speed v in field B;
// the oscillation period of the 2s population is pi / Omega = pi t0 / phi_HMW.
inline double rabi_frequency(double B, double v, const PhysicalConstants& k) {
    if (B < 0.0 || v <= 0.0)
        throw std::invalid_argument("rabi_frequency: need B >= 0, v > 0");
    return 3.0 * k.a_bohr * k.e_charge * v * B / (k.hbar * k.c);
}

struct TwoLevelAmplitudes {
    std::complex<double> c_2s{1.0, 0.0};
    std::complex<double> c_2p{0.0, 0.0};

    double norm2() const { return std::norm(c_2s) + std::norm(c_2p); }
};

namespace detail {

struct TwoLevelRhs {
    double omega;   // off-diagonal coupling / hbar
    double delta;   // upper-level offset / hbar
    double gamma;   // upper-level amplitude damping rate (full population rate)

    void operator()(const TwoLevelAmplitudes& s, TwoLevelAmplitudes& ds) const {
        static constexpr std::complex<double> I{0.0, 1.0};
        ds.c_2s = I * omega * s.c_2p;
        ds.c_2p = I * omega * s.c_2s - (I * delta + 0.5 * gamma) * s.c_2p;
    }
};

inline TwoLevelAmplitudes rk4_run(const TwoLevelRhs& rhs, TwoLevelAmplitudes s, double t, long n) {
    const double h = t / static_cast<double>(n);
    TwoLevelAmplitudes k1, k2, k3, k4, tmp;
    double norm_prev = s.norm2();
    for (long i = 0; i < n; ++i) {
        rhs(s, k1);
        tmp = {s.c_2s + 0.5 * h * k1.c_2s, s.c_2p + 0.5 * h * k1.c_2p};
        rhs(tmp, k2);
        tmp = {s.c_2s + 0.5 * h * k2.c_2s, s.c_2p + 0.5 * h * k2.c_2p};
        rhs(tmp, k3);
        tmp = {s.c_2s + h * k3.c_2s, s.c_2p + h * k3.c_2p};
        rhs(tmp, k4);
        s.c_2s += (h / 6.0) * (k1.c_2s + 2.0 * k2.c_2s + 2.0 * k3.c_2s + k4.c_2s);
        s.c_2p += (h / 6.0) * (k1.c_2p + 2.0 * k2.c_2p + 2.0 * k3.c_2p + k4.c_2p);
        // damping can only remove norm; anything else is an integrator bug
        const double norm_cur = s.norm2();
        if (norm_cur > norm_prev * (1.0 + 1e-12))
            throw std::logic_error("evolve_two_level: norm increased during a step");
        norm_prev = norm_cur;
    }
    return s;
}

} // namespace detail

// Non-Hermitian two-level evolution over [0, t]:
//
//   i d/dt c_2s =  -Omega c_2p
//   i d/dt c_2p =  -Omega c_2s + (Delta - i Gamma/2) c_2p
//
// With Gamma = Delta = 0 and initial state (1, 0) the solution is the closed
// form (cos Omega t, i sin Omega t). Classic fixed-step RK4 with initial step
// 0.02 / max(Omega, Gamma, |Delta|); the step is halved until two consecutive
// resolutions agree to rel_tol (StepSizeUnderflowError past 24 halvings).
inline TwoLevelAmplitudes evolve_two_level(const TwoLevelAmplitudes& s0, double omega, double detuning,
                                           double gamma, double t, double rel_tol = 1e-8) {
    if (t < 0.0 || omega < 0.0 || gamma < 0.0)
        throw std::invalid_argument("evolve_two_level: need t, Omega, Gamma >= 0");
    if (t == 0.0)
        return s0;
    const double scale = std::max({omega, gamma, std::fabs(detuning)});
    if (scale == 0.0)
        return s0; // free lower level, H = 0
    const detail::TwoLevelRhs rhs{omega, detuning, gamma};

    long n = static_cast<long>(std::ceil(t * scale / 0.02));
    if (n < 1) n = 1;
    TwoLevelAmplitudes prev = detail::rk4_run(rhs, s0, t, n);
    for (int halving = 0; halving < 24; ++halving) {
        n *= 2;
        const TwoLevelAmplitudes cur = detail::rk4_run(rhs, s0, t, n);
        const double diff = std::max(std::abs(cur.c_2s - prev.c_2s), std::abs(cur.c_2p - prev.c_2p));
        if (diff <= rel_tol)
            return cur;
        prev = cur;
    }
    throw StepSizeUnderflowError("evolve_two_level: tolerance not reached before step floor");
}

struct QuenchRate {
    double rate = 0.0; // s^-1
    // Perturbative-regime guard: set when Omega / Gamma_2p > 0.1 at the given
    // speed or when B >= B_res / 10 (approaching the 2s-2p level crossing).
    bool validity_warning = false;
};

// Field-induced 2s -> 1s decay rate (see the model note at the top).
inline QuenchRate quench_rate(double v, double B, const PhysicalConstants& k) {
    if (v <= 0.0 || B < 0.0)
        throw std::invalid_argument("quench_rate: need v > 0, B >= 0");
    const double vb_over_c = v * B / k.c;
    const double rate = (59049.0 / 256.0) // 3^10 / 2^8
                        / (k.alpha * k.alpha * k.alpha)
                        * (k.a_bohr * k.a_bohr * k.a_bohr / k.hbar)
                        * vb_over_c * vb_over_c;
    const double gamma_2p = 1.0 / k.tau_2p;
    const bool warn = (rabi_frequency(B, v, k) / gamma_2p > 0.1) || (B >= k.B_res / 10.0);
    return {rate, warn};
}

struct BeamParams {
    double v;              // cm/s
    double L;              // cm
    double B;              // G
    double detuning = 0.0; // rad/s, 2s-2p offset for the two-level model
    PhysicalConstants constants = default_constants();

    void validate() const {
        if (v <= 0.0 || L <= 0.0 || B < 0.0)
            throw std::invalid_argument("BeamParams: need v > 0, L > 0, B >= 0");
        constants.validate();
    }
};

struct TransmissionResult {
    double value = 1.0; // surviving 2s fraction in [0, 1]
    bool validity_warning = false;
};

// Surviving metastable fraction after the field region:
//   exp(-gamma(v, B) t0 - t0 / tau_2s),  t0 = L / v.
// Monotone non-increasing in both B and L.
inline TransmissionResult transmission(const BeamParams& p) {
    p.validate();
    const double t0 = p.L / p.v;
    const QuenchRate q = quench_rate(p.v, p.B, p.constants);
    return {std::exp(-q.rate * t0 - t0 / p.constants.tau_2s), q.validity_warning};
}

struct QuenchScanRow {
    double B;            // G
    double phi_hmw;      // rad
    double gamma;        // s^-1
    double transmission; // fraction
    bool validity_warning;
};

// Row-wise transmission scan over a field grid, in input order.
inline std::vector<QuenchScanRow> scan_transmission(const BeamParams& base,
                                                    std::span<const double> b_grid) {
    base.validate();
    std::vector<QuenchScanRow> rows;
    rows.reserve(b_grid.size());
    for (double b : b_grid) {
        BeamParams p = base;
        p.B = b;
        const TransmissionResult t = transmission(p);
        rows.push_back({b, hmw_phase_hydrogen(b, p.L, p.constants),
                        quench_rate(p.v, b, p.constants).rate, t.value, t.validity_warning});
    }
    return rows;
}

// Field at which transmission drops to the given fraction (default 1/e), by
// bisection on [0, B_hi]. The transmission is strictly decreasing in B.
inline double solve_transmission_field(const BeamParams& base, double target = std::exp(-1.0),
                                       double b_hi = 1.0e4) {
    base.validate();
    if (target <= 0.0 || target >= 1.0)
        throw std::invalid_argument("solve_transmission_field: target must lie in (0, 1)");
    auto trans = [&](double b) {
        BeamParams p = base;
        p.B = b;
        return transmission(p).value;
    };
    double lo = 0.0, hi = b_hi;
    if (trans(hi) > target)
        throw std::invalid_argument("solve_transmission_field: target not reached below b_hi");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (trans(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace dualphase
