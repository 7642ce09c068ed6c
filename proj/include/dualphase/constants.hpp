#pragma once

// Gaussian-CGS physical constants and the experimental constants used by the
// hydrogen-quench and ammonia-Ramsey modules. Single source of truth: every
// module receives a PhysicalConstants value instead of reaching for literals.
//
// Unit system is Gaussian CGS throughout: B in Gauss, E in statvolt/cm,
// length in cm, time in s, energy in erg, charge in esu.

#include <cmath>
#include <stdexcept>

namespace dualphase {

struct PhysicalConstants {
    double c = 2.99792458e10;         // speed of light, cm/s
    double hbar = 1.054571817e-27;    // reduced Planck constant, erg s
    double e_charge = 4.80320471e-10; // elementary charge, esu
    double a_bohr = 5.29177211e-9;    // Bohr radius, cm
    double alpha = 1.0 / 137.035999;  // fine-structure constant
    double m_e = 9.1093837e-28;       // electron mass, g

    double tau_2s = 0.14;    // hydrogen 2s lifetime, s
    double tau_2p = 1.6e-9;  // hydrogen 2p lifetime, s
    double B_res = 8.12e3;   // 2s-2p motional level-crossing field, G (annotation only)

    double d_ammonia = 1.47e-18; // ammonia dipole moment, esu cm (1.47 D)
    double omega_inv = 2.0 * M_PI * 23.0e9; // ammonia inversion splitting, rad/s

    double hbar_c() const { return hbar * c; }

    // Positivity is a construction invariant; the alpha / a_bohr identities are
    // checkable at any time via consistency_deviation() (values are immutable
    // by convention, so the identities cannot drift).
    void validate() const {
        const double fields[] = {c, hbar, e_charge, a_bohr, alpha, m_e,
                                 tau_2s, tau_2p, B_res, d_ammonia, omega_inv};
        for (double f : fields) {
            if (!(f > 0.0) || !std::isfinite(f))
                throw std::invalid_argument("PhysicalConstants: all fields must be strictly positive and finite");
        }
    }
};

// Canonical pinned set (CODATA 2018 numerals). Deterministic.
inline PhysicalConstants default_constants() {
    PhysicalConstants k;
    k.validate();
    return k;
}

// Relative deviations of the two internal-consistency identities:
//   alpha  = e^2 / (hbar c)
//   a_bohr = hbar^2 / (m_e e^2)
// Both are ~1e-9 for the default set and must stay below 1e-6.
struct ConsistencyDeviation {
    double alpha_rel;
    double a_bohr_rel;
    bool within(double tol) const { return alpha_rel < tol && a_bohr_rel < tol; }
};

inline ConsistencyDeviation consistency_deviation(const PhysicalConstants& k) {
    const double alpha_derived = k.e_charge * k.e_charge / (k.hbar * k.c);
    const double a_bohr_derived = k.hbar * k.hbar / (k.m_e * k.e_charge * k.e_charge);
    return {std::fabs(alpha_derived - k.alpha) / k.alpha,
            std::fabs(a_bohr_derived - k.a_bohr) / k.a_bohr};
}

// hbar and c as used by the phase integrals. Reduced mode (hbar = c = 1) keeps
// property tests free of unit noise; the formulas are unit-system transparent.
struct Units {
    double hbar = 1.0;
    double c = 1.0;

    double hbar_c() const { return hbar * c; }

    static Units reduced() { return {1.0, 1.0}; }
    static Units gaussian_cgs() {
        const PhysicalConstants k;
        return {k.hbar, k.c};
    }
    static Units from(const PhysicalConstants& k) { return {k.hbar, k.c}; }
};

} // namespace dualphase
