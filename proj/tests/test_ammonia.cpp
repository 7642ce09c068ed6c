#include "doctest.h"

#include <cmath>

#include "dualphase/ammonia.hpp"

using namespace dualphase;

namespace {
const PhysicalConstants k = default_constants();

RamseyParams params_at(double b, double eps = 0.0, double readout = 0.0) {
    return {k.d_ammonia, 1e5, 1.0, b, eps, readout, k};
}

double b_for_phase(double phi) { return phi * k.hbar_c() / (k.d_ammonia * 1.0); }
} // namespace

TEST_CASE("ammonia phase: zero field, benchmark 4.65 rad, linear in L and B") {
    CHECK(ammonia_hmw_phase(k.d_ammonia, 0.0, 1.0, k) == 0.0);
    const double phi = ammonia_hmw_phase(1.47e-18, 100.0, 1.0, k);
    CHECK(phi == doctest::Approx(4.6496522).epsilon(1e-7)); // frozen hand evaluation
    CHECK(std::fabs(phi - 4.65) < 0.02);
    CHECK(ammonia_hmw_phase(1.47e-18, 100.0, 2.0, k) == doctest::Approx(2.0 * phi).epsilon(1e-14));
    CHECK(ammonia_hmw_phase(1.47e-18, 50.0, 2.0, k) == doctest::Approx(phi).epsilon(1e-14));
}

TEST_CASE("ideal fringes: constructive at phi = 0, destructive at phi = pi") {
    CHECK(ramsey_fringe(params_at(0.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ramsey_fringe(params_at(b_for_phase(M_PI))) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(ramsey_fringe(params_at(b_for_phase(0.5 * M_PI))) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("fringe population follows (1 + cos phi)/2 and is 2 pi periodic") {
    for (double phi : {0.3, 1.0, 2.2, 3.9, 5.5}) {
        const double p = ramsey_fringe(params_at(b_for_phase(phi)));
        CHECK(p == doctest::Approx(0.5 * (1.0 + std::cos(phi))).epsilon(1e-12));
        const double p_wrapped = ramsey_fringe(params_at(b_for_phase(phi + 2.0 * M_PI)));
        CHECK(p_wrapped == doctest::Approx(p).epsilon(1e-9));
    }
}

TEST_CASE("population stays inside [0, 1] for arbitrary pulse errors and phases") {
    for (double eps : {-0.5, -0.2, 0.0, 0.13, 0.4, 1.0}) {
        for (double phi : {0.0, 0.7, 2.0, 3.14, 4.6, 6.1}) {
            const double p = ramsey_fringe(params_at(b_for_phase(phi), eps));
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
        }
    }
}

TEST_CASE("the composed propagator is unitary to 1e-12") {
    using dualphase::detail::Mat2c;
    using dualphase::detail::matmul;
    using dualphase::detail::ramsey_propagator;
    for (double eps : {0.0, 0.2, -0.35}) {
        for (double phi : {0.0, 1.3, 4.0}) {
            const Mat2c u = ramsey_propagator(phi, eps);
            const Mat2c dag{std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
            const Mat2c id = matmul(dag, u);
            CHECK(std::abs(id[0] - 1.0) < 1e-12);
            CHECK(std::abs(id[1]) < 1e-12);
            CHECK(std::abs(id[2]) < 1e-12);
            CHECK(std::abs(id[3] - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("population depends on the field only through the phase product d_a B L") {
    RamseyParams a{2.0e-18, 1e5, 0.5, 90.0, 0.0, 0.0, k};   // d_a B L = 9.0e-17
    RamseyParams b{1.0e-18, 3e5, 1.5, 60.0, 0.0, 0.0, k};   // same product
    CHECK(ammonia_hmw_phase(a.d_a, a.B, a.L, k) ==
          doctest::Approx(ammonia_hmw_phase(b.d_a, b.B, b.L, k)).epsilon(1e-14));
    CHECK(ramsey_fringe(a) == doctest::Approx(ramsey_fringe(b)).epsilon(1e-12));
}

TEST_CASE("ideal contrast is exactly one over a full fringe; pulse errors reduce it") {
    auto contrast = [&](double eps) {
        double lo = 1.0, hi = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double phi = 2.0 * M_PI * i / 1000.0;
            const double p = ramsey_fringe(params_at(b_for_phase(phi), eps));
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        return hi - lo;
    };
    CHECK(contrast(0.0) == doctest::Approx(1.0).epsilon(1e-9));
    const double c_small = contrast(0.1);
    const double c_large = contrast(0.3);
    CHECK(c_small < 1.0);
    CHECK(c_large < c_small);
}

TEST_CASE("readout detuning shifts the fringe by a pure phase offset") {
    const double phi = 1.1, shift = 0.8;
    const double shifted = ramsey_fringe(params_at(b_for_phase(phi), 0.0, shift));
    CHECK(shifted == doctest::Approx(0.5 * (1.0 + std::cos(phi + shift))).epsilon(1e-12));
}

TEST_CASE("fringe scan: deterministic rows, full cycle over 0..100 G") {
    RamseyParams base = params_at(0.0);
    const double grid[] = {0.0, 25.0, 50.0, 75.0, 100.0};
    const auto rows = scan_fringes(base, grid);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].population == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[4].phi == doctest::Approx(4.6496522).epsilon(1e-7));
    // the phase sweep covers well past 0.7 of a fringe cycle (4.65 of 2 pi rad)
    CHECK(rows[4].phi / (2.0 * M_PI) > 0.7);
    // constant-phase grid gives constant population
    const double flat_grid[] = {40.0, 40.0, 40.0};
    const auto flat = scan_fringes(base, flat_grid);
    CHECK(flat[0].population == flat[1].population);
    CHECK(flat[1].population == flat[2].population);
}

TEST_CASE("parameter validation") {
    RamseyParams bad = params_at(10.0);
    bad.d_a = 0.0;
    CHECK_THROWS_AS(ramsey_fringe(bad), std::invalid_argument);
    CHECK_THROWS_AS(ammonia_hmw_phase(1.0e-18, -5.0, 1.0, k), std::invalid_argument);
}
