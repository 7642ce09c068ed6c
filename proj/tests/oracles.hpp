#pragma once

// Independent reference implementations used only by tests. Each one computes
// the quantity a different way than the library (closed-form matrix
// exponentials, tiny-step integration, analytic-tangent quadrature, finite
// differences), so agreement is evidence rather than tautology.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "dualphase/vec3.hpp"

namespace oracles {

using Cx = std::complex<double>;

// --- exact two-level evolution -----------------------------------------------
// c' = M c with M = [[0, i W], [i W, -(i D + G/2)]], solved by the 2x2
// spectral decomposition exp(M t) = e^(l1 t) P1 + e^(l2 t) P2.
inline std::array<Cx, 2> two_level_exact(Cx c2s, Cx c2p, double omega, double delta, double gamma,
                                         double t) {
    const Cx I{0.0, 1.0};
    const Cx d = -(I * delta + 0.5 * gamma);
    const Cx disc = std::sqrt(d * d - 4.0 * omega * omega);
    const Cx l1 = 0.5 * (d + disc);
    const Cx l2 = 0.5 * (d - disc);
    // M - l I applied to the state
    auto apply_shifted = [&](Cx l, Cx a, Cx b) {
        return std::array<Cx, 2>{-l * a + I * omega * b, I * omega * a + (d - l) * b};
    };
    const auto p1 = apply_shifted(l2, c2s, c2p); // (M - l2) c
    const auto p2 = apply_shifted(l1, c2s, c2p); // (M - l1) c
    const Cx e1 = std::exp(l1 * t), e2 = std::exp(l2 * t);
    const Cx denom = l1 - l2;
    return {(e1 * p1[0] - e2 * p2[0]) / denom, (e1 * p1[1] - e2 * p2[1]) / denom};
}

// --- brute-force two-level integration ---------------------------------------
// Plain fixed-step RK4 with a caller-chosen tiny step count; no adaptivity,
// no norm guards. Kept structurally different from the library integrator.
inline std::array<Cx, 2> two_level_brute(Cx c2s, Cx c2p, double omega, double delta, double gamma,
                                         double t, long steps) {
    const Cx I{0.0, 1.0};
    const double h = t / static_cast<double>(steps);
    auto f = [&](const std::array<Cx, 2>& y) {
        return std::array<Cx, 2>{I * omega * y[1], I * omega * y[0] - (I * delta + 0.5 * gamma) * y[1]};
    };
    std::array<Cx, 2> y{c2s, c2p};
    for (long i = 0; i < steps; ++i) {
        const auto k1 = f(y);
        const auto k2 = f({y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]});
        const auto k3 = f({y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]});
        const auto k4 = f({y[0] + h * k3[0], y[1] + h * k3[1]});
        y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    }
    return y;
}

// --- analytic-tangent loop quadrature ----------------------------------------
// Loop integral of a vector field around an origin-centered ellipse in the
// z = z0 plane, via the midpoint rule on the smooth parametrization (spectral
// accuracy for periodic integrands; independent of the polyline engine).
inline double loop_integral_ellipse(const std::function<dualphase::Vec3(const dualphase::Vec3&)>& field,
                                    double a, double b, double z0 = 0.0, int n = 4096) {
    double total = 0.0;
    const double dtheta = 2.0 * M_PI / n;
    for (int j = 0; j < n; ++j) {
        const double theta = (j + 0.5) * dtheta;
        const dualphase::Vec3 x{a * std::cos(theta), b * std::sin(theta), z0};
        const dualphase::Vec3 tangent{-a * std::sin(theta), b * std::cos(theta), 0.0};
        total += dualphase::dot(field(x), tangent) * dtheta;
    }
    return total;
}

// --- finite-difference curl ---------------------------------------------------
inline dualphase::Vec3 curl_fd(const std::function<dualphase::Vec3(const dualphase::Vec3&)>& field,
                               const dualphase::Vec3& x, double h = 1e-5) {
    auto d = [&](int comp, const dualphase::Vec3& dir) {
        const dualphase::Vec3 fp = field(x + dir * h);
        const dualphase::Vec3 fm = field(x - dir * h);
        const dualphase::Vec3 df = (fp - fm) / (2.0 * h);
        return comp == 0 ? df.x : comp == 1 ? df.y : df.z;
    };
    const dualphase::Vec3 ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
    return {d(2, ey) - d(1, ez), d(0, ez) - d(2, ex), d(1, ex) - d(0, ey)};
}

// --- cylinder-surface flux -----------------------------------------------------
// Outward flux of a field through the side of a coaxial cylinder of radius r
// and unit height about the z axis (ends are skipped; the fields under test
// have no axial component).
inline double cylinder_side_flux(const std::function<dualphase::Vec3(const dualphase::Vec3&)>& field,
                                 double r, int n_phi = 256, int n_z = 16) {
    double total = 0.0;
    const double dphi = 2.0 * M_PI / n_phi;
    const double dz = 1.0 / n_z;
    for (int i = 0; i < n_phi; ++i) {
        const double phi = (i + 0.5) * dphi;
        const dualphase::Vec3 n_hat{std::cos(phi), std::sin(phi), 0.0};
        for (int j = 0; j < n_z; ++j) {
            const double z = (j + 0.5) * dz - 0.5;
            const dualphase::Vec3 x = n_hat * r + dualphase::Vec3{0.0, 0.0, z};
            total += dualphase::dot(field(x), n_hat) * r * dphi * dz;
        }
    }
    return total;
}

} // namespace oracles
