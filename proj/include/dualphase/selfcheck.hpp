#pragma once

// Built-in verification battery. Each check pins one of the toolkit's
// headline numbers or structural identities with an explicit tolerance, using
// whatever constants the caller supplies, so a bad override is caught here
// (e.g. doubling c breaks the alpha identity of check 1).
//
// run_selfcheck returns one result per check; the CLI prints them as PASS/FAIL
// lines and exits nonzero on any failure.

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dualphase/ammonia.hpp"
#include "dualphase/constants.hpp"
#include "dualphase/em_sources.hpp"
#include "dualphase/hydrogen.hpp"
#include "dualphase/lorentz.hpp"
#include "dualphase/path.hpp"
#include "dualphase/phases.hpp"

namespace dualphase {

struct CheckResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

struct SelfcheckOptions {
    double quadrature_rel = 1e-6;
    double ode_rel = 1e-8;

    void validate() const {
        if (!(quadrature_rel > 0.0) || !(ode_rel > 0.0))
            throw ConfigError("selfcheck: tolerances must be strictly positive");
    }
};

namespace detail {

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

inline double rel_dev(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// --- check 6 helper: zero of Re c_2s(t) by bisection ------------------------
inline double bisect_c2s_zero(double omega, double t_lo, double t_hi, double ode_rel) {
    auto f = [&](double t) {
        return evolve_two_level({{1.0, 0.0}, {0.0, 0.0}}, omega, 0.0, 0.0, t, ode_rel).c_2s.real();
    };
    double f_lo = f(t_lo);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (t_lo + t_hi);
        const double f_mid = f(mid);
        if ((f_lo > 0.0) == (f_mid > 0.0)) {
            t_lo = mid;
            f_lo = f_mid;
        } else {
            t_hi = mid;
        }
    }
    return 0.5 * (t_lo + t_hi);
}

// --- check 7 helper: log-slope of the 2s survival ---------------------------
inline double fitted_survival_rate(double omega, double gamma, double ode_rel) {
    const double t1 = 30.0 / gamma, t2 = 230.0 / gamma; // transient ~1/gamma is long gone
    const TwoLevelAmplitudes a1 = evolve_two_level({}, omega, 0.0, gamma, t1, ode_rel);
    const TwoLevelAmplitudes a2 = evolve_two_level({}, omega, 0.0, gamma, t2, ode_rel);
    return std::log(std::norm(a1.c_2s) / std::norm(a2.c_2s)) / (t2 - t1);
}

} // namespace detail

inline std::vector<CheckResult> run_selfcheck(const PhysicalConstants& k,
                                              const SelfcheckOptions& opt = {}) {
    opt.validate();
    std::vector<CheckResult> out;
    auto add = [&](int id, const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
        try {
            auto [ok, detail] = body();
            out.push_back({id, name, ok, detail});
        } catch (const std::exception& e) {
            out.push_back({id, name, false, std::string("exception: ") + e.what()});
        }
    };

    using detail::fmt;
    using detail::rel_dev;

    // 1. internal consistency of the constant set
    add(1, "constants consistency alpha = e^2/hbar c, a_B = hbar^2/m_e e^2", [&] {
        const ConsistencyDeviation d = consistency_deviation(k);
        return std::make_pair(d.within(1e-6),
                              "alpha dev " + fmt(d.alpha_rel) + ", a_B dev " + fmt(d.a_bohr_rel));
    });

    // 2. hydrogen phase coefficient ~0.241 per G cm
    add(2, "hydrogen phase coefficient in [0.239, 0.242]", [&] {
        const double c0 = hmw_phase_hydrogen(1.0, 1.0, k);
        return std::make_pair(c0 >= 0.239 && c0 <= 0.242, "phi(1 G, 1 cm) = " + fmt(c0));
    });

    // 3. quench-rate coefficient 92.6 +- 0.5 at v = 1e6; exact B^2 law; v^2 scaling
    add(3, "quench rate 92.6 +- 0.5 s^-1 at B = 1 G, v = 1e6; B^2 and v^2 laws", [&] {
        const double g1 = quench_rate(1e6, 1.0, k).rate;
        bool ok = g1 >= 92.1 && g1 <= 93.1;
        std::string detail = "gamma(1e6, 1) = " + fmt(g1);
        for (double b : {0.5, 1.0, 7.25, 130.0}) {
            if (quench_rate(1e6, 2.0 * b, k).rate != 4.0 * quench_rate(1e6, b, k).rate) {
                ok = false;
                detail += "; B^2 doubling not exact at B = " + fmt(b);
            }
        }
        const double s1 = quench_rate(2.0e6, 3.0, k).rate / (2.0e6 * 2.0e6);
        const double s2 = quench_rate(7.3e5, 3.0, k).rate / (7.3e5 * 7.3e5);
        if (rel_dev(s1, s2) > 1e-9) {
            ok = false;
            detail += "; v^2 scaling dev " + fmt(rel_dev(s1, s2));
        }
        return std::make_pair(ok, detail);
    });

    // 4. 1/e transmission field near 100 G
    add(4, "1/e transmission field in [100, 108] G at L = 1 cm, v = 1e6", [&] {
        BeamParams p{1e6, 1.0, 0.0, 0.0, k};
        const double b = solve_transmission_field(p);
        return std::make_pair(b >= 100.0 && b <= 108.0, "root B = " + fmt(b) + " G");
    });

    // 5. phi(100 G, 1 cm) within 5% of 8 pi
    add(5, "hydrogen phase at 100 G, 1 cm within 5% of 8 pi", [&] {
        const double phi = hmw_phase_hydrogen(100.0, 1.0, k);
        const double dev = rel_dev(phi, 8.0 * M_PI);
        return std::make_pair(dev <= 0.05, "phi = " + fmt(phi) + ", dev from 8 pi = " + fmt(dev));
    });

    // 6. two-level dynamics matches (cos, i sin); period = pi t0 / phi
    add(6, "two-level closed form to 1e-8 for Omega t <= 100; period pi t0/phi", [&] {
        const double omega = rabi_frequency(100.0, 1e6, k);
        double worst = 0.0;
        for (double wt : {0.3, 1.0, 2.5, 7.0, 15.0, 31.0, 55.0, 77.0, 100.0}) {
            const double t = wt / omega;
            const TwoLevelAmplitudes s = evolve_two_level({}, omega, 0.0, 0.0, t, opt.ode_rel);
            worst = std::max(worst, std::abs(s.c_2s - std::complex<double>(std::cos(wt), 0.0)));
            worst = std::max(worst, std::abs(s.c_2p - std::complex<double>(0.0, std::sin(wt))));
        }
        const double z1 = detail::bisect_c2s_zero(omega, 0.9 * M_PI_2 / omega, 1.1 * M_PI_2 / omega, opt.ode_rel);
        const double z2 = detail::bisect_c2s_zero(omega, 0.9 * 3.0 * M_PI_2 / omega,
                                                  1.1 * 3.0 * M_PI_2 / omega, opt.ode_rel);
        const double period = z2 - z1;
        const double t0 = 1.0 / 1e6; // L = 1 cm at v = 1e6
        const double period_ref = M_PI * t0 / hmw_phase_hydrogen(100.0, 1.0, k);
        const double pdev = rel_dev(period, period_ref);
        const bool ok = worst <= 1e-8 && pdev <= 1e-6;
        return std::make_pair(ok, "worst component dev " + fmt(worst) + ", period dev " + fmt(pdev));
    });

    // 7. survival decay rate matches 4 Omega^2 / Gamma in the weak-mixing limit
    add(7, "slow decay rate = 4 Omega^2/Gamma within 2% for Omega/Gamma <= 0.05", [&] {
        const double gamma = 1.0 / k.tau_2p;
        bool ok = true;
        std::string detail;
        for (double ratio : {0.05, 0.02}) {
            const double omega = ratio * gamma;
            const double fitted = detail::fitted_survival_rate(omega, gamma, opt.ode_rel);
            const double dev = rel_dev(fitted, 4.0 * omega * omega / gamma);
            if (dev > 0.02) ok = false;
            detail += "Omega/Gamma=" + fmt(ratio) + " dev " + fmt(dev) + "; ";
        }
        // Reported by design: the elimination rate is ~4x the quench-rate formula.
        const double omega1 = rabi_frequency(1.0, 1e6, k);
        const double elim = 4.0 * omega1 * omega1 / gamma;
        const double quench = quench_rate(1e6, 1.0, k).rate;
        detail += "model gap: elimination " + fmt(elim) + " vs quench " + fmt(quench) +
                  " s^-1 G^-2 (ratio " + fmt(elim / quench) + ")";
        return std::make_pair(ok, detail);
    });

    // 8. the four phase integrals vs closed forms; winding, reparametrization, gauge
    add(8, "phase integrals vs closed forms on circle/ellipse/square; winding, reparam, gauge", [&] {
        const Units u = Units::reduced();
        bool ok = true;
        std::string detail;
        const ParamPath circle = make_circle(1.3, 4096);
        const ParamPath ellipse = make_ellipse(1.7, 0.9, 4096);
        const ParamPath square = make_square(1.1, 4096);
        const SourceConfig mag = mag_flux_tube(5.0);
        const SourceConfig elec = elec_flux_tube(5.0);
        const SourceConfig mono = monopole_line(1.2);
        const SourceConfig line = charge_line(1.2);
        const Vec3 dip{0.0, 0.0, 0.75};

        auto probe_all = [&](const ParamPath& path, const char* tag) {
            const struct {
                PhaseKind kind;
                double value;
                double closed;
            } cases[] = {
                {PhaseKind::AB, phase_ab_integral(path, 0.8, mag, u, opt.quadrature_rel).value,
                 closed_form_phase(PhaseKind::AB, 0.8, 5.0, u)},
                {PhaseKind::DAB, phase_dab_integral(path, 0.8, elec, u, opt.quadrature_rel).value,
                 closed_form_phase(PhaseKind::DAB, 0.8, 5.0, u)},
                {PhaseKind::HMW, phase_hmw_integral(path, dip, mono, u, opt.quadrature_rel).value,
                 closed_form_phase(PhaseKind::HMW, 0.75, 1.2, u)},
                {PhaseKind::AC, phase_ac_integral(path, dip, line, u, opt.quadrature_rel).value,
                 closed_form_phase(PhaseKind::AC, 0.75, 1.2, u)},
            };
            for (const auto& c : cases) {
                const double dev = rel_dev(c.value, c.closed);
                if (dev > 1e-6) {
                    ok = false;
                    detail += std::string(to_string(c.kind)) + "/" + tag + " dev " + fmt(dev) + "; ";
                }
            }
        };
        probe_all(circle, "circle");
        probe_all(ellipse, "ellipse");
        probe_all(square, "square");

        const double one_turn = phase_ab_integral(circle, 0.8, mag, u, opt.quadrature_rel).value;
        const ParamPath triple = make_circle(1.3, 4096, 3);
        const double three_turn = phase_ab_integral(triple, 0.8, mag, u, opt.quadrature_rel).value;
        if (rel_dev(three_turn, 3.0 * one_turn) > 1e-12) {
            ok = false;
            detail += "winding additivity dev " + fmt(rel_dev(three_turn, 3.0 * one_turn)) + "; ";
        }

        ParamPath warped = circle; // same geometry, non-uniform clock
        for (std::size_t i = 0; i < warped.times.size(); ++i) {
            const double s = warped.times[i];
            warped.times[i] = s + 0.2 / (2.0 * M_PI) * (1.0 - std::cos(2.0 * M_PI * s));
        }
        const double rep = phase_ab_integral(warped, 0.8, mag, u, opt.quadrature_rel).value;
        if (rel_dev(rep, one_turn) > 1e-9) {
            ok = false;
            detail += "reparametrization dev " + fmt(rel_dev(rep, one_turn)) + "; ";
        }

        // gauge shift A -> A + grad chi, chi smooth and single-valued
        auto grad_chi = [](const Vec3& x) {
            return Vec3{0.1 * std::cos(x.x) * std::cos(2.0 * x.y) + 0.05 * x.z,
                        -0.2 * std::sin(x.x) * std::sin(2.0 * x.y),
                        0.05 * x.x};
        };
        const double plain = (0.8 / u.hbar_c()) *
            polyline_line_integral(circle, [&](const Vec3& x) { return eval_vector_potential(mag, x); }, 1e-9);
        const double gauged = (0.8 / u.hbar_c()) *
            polyline_line_integral(circle,
                                   [&](const Vec3& x) { return eval_vector_potential(mag, x) + grad_chi(x); },
                                   1e-9);
        if (rel_dev(gauged, plain) > 1e-9) {
            ok = false;
            detail += "gauge shift dev " + fmt(rel_dev(gauged, plain)) + "; ";
        }
        if (ok) detail = "all phase-engine identities hold";
        return std::make_pair(ok, detail);
    });

    // 9. duality relations
    add(9, "duality: phi_HMW = -phi_AC; dualize_field^4 = 1; dualize_config^2 = 1", [&] {
        const Units u = Units::reduced();
        const ParamPath path = make_ellipse(1.4, 1.0, 4096);
        const Vec3 s{0.0, 0.0, 0.65};
        const double hmw = phase_hmw_integral(path, s, monopole_line(1.7), u, opt.quadrature_rel).value;
        const double ac = phase_ac_integral(path, s, charge_line(1.7), u, opt.quadrature_rel).value;
        bool ok = rel_dev(hmw, -ac) <= 1e-9;
        std::string detail = "phi_HMW vs -phi_AC dev " + fmt(rel_dev(hmw, -ac));

        const EMField f{{0.3, -1.2, 0.7}, {2.0, 0.1, -0.4}};
        EMField g = f;
        for (int i = 0; i < 4; ++i) g = dualize_field(g);
        if (!(g.E == f.E && g.B == f.B)) {
            ok = false;
            detail += "; dualize_field^4 != identity";
        }
        const SourceConfig src = charge_line(2.5);
        const Probe p{0.1, -0.2, {0.3, 0.0, 0.4}, {0.0, -0.5, 0.6}};
        const auto [s1, p1] = dualize_config(src, p);
        const auto [s2, p2] = dualize_config(s1, p1);
        if (!(s2.kind == src.kind && s2.strength == src.strength && p2.e == p.e && p2.g == p.g &&
              p2.d == p.d && p2.m == p.m)) {
            ok = false;
            detail += "; dualize_config^2 != identity";
        }
        return std::make_pair(ok, detail);
    });

    // 10. co-moving-frame phases track the line integrals to first order
    add(10, "co-moving phase vs line integral: error <= 5 v/c, halving ratio >= 1.8", [&] {
        const Units u = Units::reduced();
        bool ok = true;
        std::string detail;
        auto comoving_err = [&](PhaseKind kind, double beta) {
            const double radius = 1.0;
            const double period = 2.0 * M_PI * radius / (beta * u.c);
            const ParamPath path = make_circle(radius, 4096, 1, period);
            double pc = 0.0, pi_val = 0.0;
            if (kind == PhaseKind::AB) {
                const SourceConfig src = mag_flux_tube(2.0 * M_PI * 1.3);
                Probe p;
                p.e = 0.9;
                pc = phase_from_comoving(src, p, path, u, opt.quadrature_rel);
                pi_val = phase_ab_integral(path, 0.9, src, u, opt.quadrature_rel).value;
            } else {
                const SourceConfig src = charge_line(1.1);
                Probe p;
                p.m = {0.0, 0.0, 0.7};
                pc = phase_from_comoving(src, p, path, u, opt.quadrature_rel);
                pi_val = phase_ac_integral(path, p.m, src, u, opt.quadrature_rel).value;
            }
            return std::fabs(pc - pi_val) / std::fabs(pi_val);
        };
        for (PhaseKind kind : {PhaseKind::AB, PhaseKind::AC}) {
            for (double beta : {1e-3, 1e-4, 1e-5}) {
                const double err = comoving_err(kind, beta);
                if (err > 5.0 * beta) {
                    ok = false;
                    detail += std::string(to_string(kind)) + " err " + fmt(err) + " at beta " +
                              fmt(beta) + "; ";
                }
            }
            const double e1 = comoving_err(kind, 1e-3);
            const double e2 = comoving_err(kind, 5e-4);
            if (!(e1 / e2 >= 1.8)) ok = false;
            detail += std::string(to_string(kind)) + " halving ratio " + fmt(e1 / e2) + "; ";
        }
        return std::make_pair(ok, detail);
    });

    // 11. ammonia fringes
    add(11, "ammonia fringe (1 + cos phi)/2, contrast 1, phi(1.47 D, 100 G, 1 cm) = 4.65 +- 0.02", [&] {
        bool ok = true;
        std::string detail;
        RamseyParams base{k.d_ammonia, 1e5, 1.0, 0.0, 0.0, 0.0, k};
        const double b_2pi = 2.0 * M_PI * k.hbar_c() / (k.d_ammonia * base.L);
        double pmin = 1.0, pmax = 0.0, worst = 0.0;
        for (int i = 0; i <= 400; ++i) {
            RamseyParams p = base;
            p.B = b_2pi * static_cast<double>(i) / 400.0;
            const double pop = ramsey_fringe(p);
            const double phi = ammonia_hmw_phase(p.d_a, p.B, p.L, k);
            worst = std::max(worst, std::fabs(pop - 0.5 * (1.0 + std::cos(phi))));
            pmin = std::min(pmin, pop);
            pmax = std::max(pmax, pop);
        }
        if (worst > 1e-9) {
            ok = false;
            detail += "fringe form dev " + fmt(worst) + "; ";
        }
        if (std::fabs((pmax - pmin) - 1.0) > 1e-9) {
            ok = false;
            detail += "contrast " + fmt(pmax - pmin) + "; ";
        }
        const double phi100 = ammonia_hmw_phase(1.47e-18, 100.0, 1.0, k);
        if (std::fabs(phi100 - 4.65) > 0.02) {
            ok = false;
            detail += "phi(100 G) = " + fmt(phi100) + "; ";
        }
        if (ok)
            detail = "contrast " + fmt(pmax - pmin) + ", phi(100 G) = " + fmt(phi100);
        return std::make_pair(ok, detail);
    });

    return out;
}

} // namespace dualphase
