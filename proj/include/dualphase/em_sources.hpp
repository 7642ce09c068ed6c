#pragma once

// Idealized line sources, their fields and vector potentials, and the Maxwell
// duality transform.
//
// Four source kinds, all straight lines of infinite extent:
//   ChargeLine    E = 2 lambda_E rho_hat / rho, B = 0
//   MonopoleLine  B = 2 lambda_M rho_hat / rho, E = 0
//   MagFluxTube   E = B = 0 off axis; A   = Phi_M / (2 pi rho) phi_hat
//   ElecFluxTube  E = B = 0 off axis; A_E = Phi_E / (2 pi rho) phi_hat
//
// Flux tubes are zero-radius idealizations: field identically zero off-axis,
// potential singular on-axis. Azimuthal gauge is the canonical gauge; phi_hat
// is right-handed about the source axis. lambda_M carries the same CGS
// dimensions as lambda_E (duality-symmetric units), so the duality transform
// maps strengths without conversion factors.

#include <cmath>
#include <utility>

#include "dualphase/errors.hpp"
#include "dualphase/vec3.hpp"

namespace dualphase {

inline constexpr double kRhoMin = 1e-12; // cm; closer than this counts as on-axis

enum class SourceKind { ChargeLine, MonopoleLine, MagFluxTube, ElecFluxTube };

inline const char* to_string(SourceKind k) {
    switch (k) {
        case SourceKind::ChargeLine: return "charge_line";
        case SourceKind::MonopoleLine: return "monopole_line";
        case SourceKind::MagFluxTube: return "mag_flux_tube";
        case SourceKind::ElecFluxTube: return "elec_flux_tube";
    }
    return "?";
}

struct SourceConfig {
    SourceKind kind = SourceKind::MagFluxTube;
    double strength = 0.0;      // lambda (esu/cm) for lines, Phi (G cm^2) for tubes; sign = orientation
    Vec3 axis{0.0, 0.0, 1.0};   // unit vector
    Vec3 axis_point{0.0, 0.0, 0.0};

    void validate() const {
        if (std::fabs(norm(axis) - 1.0) > 1e-12)
            throw std::invalid_argument("SourceConfig: axis must be unit length");
        if (!std::isfinite(strength))
            throw std::invalid_argument("SourceConfig: strength must be finite");
    }
};

inline SourceConfig charge_line(double lambda_e, Vec3 axis = {0, 0, 1}, Vec3 axis_point = {}) {
    return {SourceKind::ChargeLine, lambda_e, normalized(axis), axis_point};
}
inline SourceConfig monopole_line(double lambda_m, Vec3 axis = {0, 0, 1}, Vec3 axis_point = {}) {
    return {SourceKind::MonopoleLine, lambda_m, normalized(axis), axis_point};
}
inline SourceConfig mag_flux_tube(double phi_m, Vec3 axis = {0, 0, 1}, Vec3 axis_point = {}) {
    return {SourceKind::MagFluxTube, phi_m, normalized(axis), axis_point};
}
inline SourceConfig elec_flux_tube(double phi_e, Vec3 axis = {0, 0, 1}, Vec3 axis_point = {}) {
    return {SourceKind::ElecFluxTube, phi_e, normalized(axis), axis_point};
}

struct EMField {
    Vec3 E{}; // statvolt/cm
    Vec3 B{}; // G
};

// Quantum probe attributes. A single probe may carry several couplings; unused
// ones stay zero.
struct Probe {
    double e = 0.0; // electric charge, esu
    double g = 0.0; // magnetic monopole charge, duality-symmetric esu
    Vec3 d{};       // electric dipole, esu cm
    Vec3 m{};       // magnetic dipole, erg/G
};

// Local cylindrical frame about a source line. Throws OnAxisError inside rho_min.
struct CylFrame {
    double rho;
    Vec3 rho_hat;
    Vec3 phi_hat;
};

inline CylFrame cylindrical_frame(const Vec3& point, const Vec3& axis, const Vec3& axis_point,
                                  double rho_min = kRhoMin) {
    const Vec3 r = point - axis_point;
    const Vec3 radial = r - axis * dot(r, axis);
    const double rho = norm(radial);
    if (rho <= rho_min)
        throw OnAxisError("point within rho_min of the source line");
    const Vec3 rho_hat = radial / rho;
    return {rho, rho_hat, cross(axis, rho_hat)};
}

// Fields of the source at a point off the line.
inline EMField eval_field(const SourceConfig& src, const Vec3& point) {
    src.validate();
    const CylFrame f = cylindrical_frame(point, src.axis, src.axis_point);
    EMField out;
    switch (src.kind) {
        case SourceKind::ChargeLine:
            out.E = f.rho_hat * (2.0 * src.strength / f.rho);
            break;
        case SourceKind::MonopoleLine:
            out.B = f.rho_hat * (2.0 * src.strength / f.rho);
            break;
        case SourceKind::MagFluxTube:
        case SourceKind::ElecFluxTube:
            break; // all flux confined to the axis
    }
    return out;
}

// Vector potential of a flux tube (A for MagFluxTube, the dual-electric A_E
// for ElecFluxTube), azimuthal gauge. WrongKindError for line-charge kinds.
inline Vec3 eval_vector_potential(const SourceConfig& src, const Vec3& point) {
    src.validate();
    if (src.kind != SourceKind::MagFluxTube && src.kind != SourceKind::ElecFluxTube)
        throw WrongKindError("vector potential is defined for flux tubes only");
    const CylFrame f = cylindrical_frame(point, src.axis, src.axis_point);
    return f.phi_hat * (src.strength / (2.0 * M_PI * f.rho));
}

// Flux carried by a tube built from a line density of point dipoles:
// Phi = 4 pi^2 * (dipoles per unit length).
inline double flux_from_dipole_density(double mu_or_delta) {
    return 4.0 * M_PI * M_PI * mu_or_delta;
}

// One application of the duality rotation on fields: (E, B) -> (-B, E).
// Applying it twice negates both fields; four applications give the identity.
inline EMField dualize_field(const EMField& f) {
    return {-f.B, f.E};
}

// Duality on a (source, probe) configuration: source kinds swap within their
// dual pair with strengths preserved, probe charges and dipoles swap
// (e <-> g, d <-> m). This map is an involution.
inline std::pair<SourceConfig, Probe> dualize_config(const SourceConfig& src, const Probe& p) {
    SourceConfig s = src;
    switch (src.kind) {
        case SourceKind::ChargeLine: s.kind = SourceKind::MonopoleLine; break;
        case SourceKind::MonopoleLine: s.kind = SourceKind::ChargeLine; break;
        case SourceKind::MagFluxTube: s.kind = SourceKind::ElecFluxTube; break;
        case SourceKind::ElecFluxTube: s.kind = SourceKind::MagFluxTube; break;
    }
    Probe q;
    q.e = p.g;
    q.g = p.e;
    q.d = p.m;
    q.m = p.d;
    return {s, q};
}

} // namespace dualphase
