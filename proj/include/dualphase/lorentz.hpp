#pragma once

// First-order Lorentz transforms of fields and potentials, co-moving
// interaction Hamiltonians, and the co-moving-frame phase integral.
//
// Sign conventions, used verbatim throughout:
//   E' = E - v x B / c          B' = B + v x E / c
//   V' = V - v . A / c          A'_par = A_par - V v / c,  A'_perp = A_perp
// These are the small-velocity forms; |v| must stay below 0.1 c (TooFastError
// otherwise). With E = 0 in the lab, -d . E' reduces to the Roentgen
// interaction d . (v x B / c).
//
// The dual sector: a monopole probe couples to the dual scalar potential
// V_dual whose boost rule is the duality image of the AB chain. The duality
// rotation sends A -> -A_E, so the image of V' = V - v . A / c is
//   V'_dual = V_dual + v . A_dual / c
// with A_dual the dual-electric vector potential (curl A_dual = E). The sign
// flip relative to the electric rule is exactly what produces
// phi_DAB = -g Phi_E / hbar c.

#include <cmath>

#include "dualphase/constants.hpp"
#include "dualphase/em_sources.hpp"
#include "dualphase/errors.hpp"
#include "dualphase/path.hpp"
#include "dualphase/phases.hpp"
#include "dualphase/vec3.hpp"

namespace dualphase {

inline constexpr double kMaxBeta = 0.1; // first-order validity guard

struct Potentials {
    double V = 0.0;   // scalar potential, statvolt
    Vec3 A{};         // vector potential, G cm
    double V_dual = 0.0; // dual scalar potential (monopole sector)
    Vec3 A_dual{};       // dual-electric vector potential A_E
};

namespace detail {

inline void check_speed(const Vec3& v, double c) {
    if (norm(v) >= kMaxBeta * c)
        throw TooFastError("|v| >= 0.1 c: outside first-order boost validity");
}

} // namespace detail

inline EMField boost_fields(const EMField& f, const Vec3& v, double c) {
    detail::check_speed(v, c);
    return {f.E - cross(v, f.B) / c, f.B + cross(v, f.E) / c};
}

inline Potentials boost_potentials(const Potentials& p, const Vec3& v, double c) {
    detail::check_speed(v, c);
    Potentials out;
    out.V = p.V - dot(v, p.A) / c;
    out.V_dual = p.V_dual + dot(v, p.A_dual) / c;
    // The parallel/perpendicular split collapses to a single shift along v:
    // only the component of A along v changes, by -V |v| / c.
    out.A = p.A - v * (p.V / c);
    out.A_dual = p.A_dual + v * (p.V_dual / c);
    return out;
}

// Interaction energy seen in the frame co-moving with the probe:
//   H' = -e V' - g V'_dual - d . E' - m . B'
// For a pure electric dipole with E = 0 in the lab this equals the Roentgen
// form d . (v x B / c).
inline double comoving_hamiltonian(const Probe& p, const EMField& f_lab, const Potentials& pot_lab,
                                   const Vec3& v, double c) {
    const EMField f = boost_fields(f_lab, v, c);
    const Potentials pot = boost_potentials(pot_lab, v, c);
    return -p.e * pot.V - p.g * pot.V_dual - dot(p.d, f.E) - dot(p.m, f.B);
}

// Lab-frame potentials of a source. Line charges use the logarithmic gauge
// V = -2 lambda ln(rho / rho_ref) with rho_ref = 1 cm; flux tubes carry the
// azimuthal-gauge vector potential in their sector and no scalar potential.
inline Potentials eval_potentials(const SourceConfig& src, const Vec3& point) {
    src.validate();
    const CylFrame f = cylindrical_frame(point, src.axis, src.axis_point);
    Potentials out;
    switch (src.kind) {
        case SourceKind::ChargeLine:
            out.V = -2.0 * src.strength * std::log(f.rho);
            break;
        case SourceKind::MonopoleLine:
            out.V_dual = -2.0 * src.strength * std::log(f.rho);
            break;
        case SourceKind::MagFluxTube:
            out.A = f.phi_hat * (src.strength / (2.0 * M_PI * f.rho));
            break;
        case SourceKind::ElecFluxTube:
            out.A_dual = f.phi_hat * (src.strength / (2.0 * M_PI * f.rho));
            break;
    }
    return out;
}

// Phase accumulated by the probe's internal clock while it traverses the
// timed path through the source's fields and potentials:
//
//   phi = (1 / hbar) int H'(t) dtau,   dtau = sqrt(1 - v^2/c^2) dt.
//
// H' is evaluated per polyline segment with the chord velocity v = dl / dt,
// on the same sub-chord midpoints and Richardson ladder as the line-integral
// phases. The proper-time weight is the only beyond-first-order ingredient:
// it makes the deviation from the topological value scale as (v/c)^2 / 2,
// vanishing in the v/c -> 0 limit where the first-order chain is exact.
inline double phase_from_comoving(const SourceConfig& src, const Probe& probe, const ParamPath& path,
                                  const Units& units = Units::reduced(),
                                  double rel_tol = kQuadratureRelTol) {
    path.validate();
    src.validate();
    for (const Vec3& pt : path.points)
        cylindrical_frame(pt, src.axis, src.axis_point); // rejects samples on the line

    const auto pass = [&](int k, double& abs_accum) {
        double total = 0.0;
        abs_accum = 0.0;
        for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
            const Vec3 a = path.points[i];
            const Vec3 chord = path.points[i + 1] - a;
            const double dt = path.times[i + 1] - path.times[i];
            const Vec3 v = chord / dt;
            detail::check_speed(v, units.c);
            const double beta2 = dot(v, v) / (units.c * units.c);
            const double dtau = (dt / k) * std::sqrt(1.0 - beta2);
            for (int j = 0; j < k; ++j) {
                const Vec3 mid = a + chord * ((j + 0.5) / k);
                const double h = comoving_hamiltonian(probe, eval_field(src, mid),
                                                      eval_potentials(src, mid), v, units.c);
                const double contrib = h * dtau;
                total += contrib;
                abs_accum += std::fabs(contrib);
            }
        }
        return total / units.hbar;
    };

    double abs_mass = 0.0;
    double prev = pass(1, abs_mass);
    double best = prev;
    for (int k = 2; k <= kMaxSubdivision; k *= 2) {
        const double cur = pass(k, abs_mass);
        best = cur + (cur - prev) / 3.0;
        const double diff = std::fabs(cur - prev);
        if (diff <= rel_tol * std::fabs(best) || diff <= 1e-14 * abs_mass / units.hbar)
            return best;
        prev = cur;
    }
    return best;
}

} // namespace dualphase
