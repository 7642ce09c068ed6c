// Computes the four topological phases on the same unit loop, in reduced
// units, and compares each line integral against its closed form.

#include <cstdio>

#include "dualphase/dualphase.hpp"

using namespace dualphase;

int main() {
    const Units u = Units::reduced();
    const ParamPath loop = make_circle(1.0, 4096);
    const Vec3 dip{0.0, 0.0, 1.0};

    const PhaseResult ab = phase_ab_integral(loop, 1.0, mag_flux_tube(2.0 * M_PI), u);
    const PhaseResult dab = phase_dab_integral(loop, 1.0, elec_flux_tube(2.0 * M_PI), u);
    const PhaseResult hmw = phase_hmw_integral(loop, dip, monopole_line(1.0), u);
    const PhaseResult ac = phase_ac_integral(loop, dip, charge_line(1.0), u);

    std::printf("%-5s %10s %14s %14s\n", "kind", "winding", "integral", "closed form");
    std::printf("%-5s %10d %14.9f %14.9f\n", "AB", ab.winding, ab.value,
                closed_form_phase(PhaseKind::AB, 1.0, 2.0 * M_PI, u));
    std::printf("%-5s %10d %14.9f %14.9f\n", "DAB", dab.winding, dab.value,
                closed_form_phase(PhaseKind::DAB, 1.0, 2.0 * M_PI, u));
    std::printf("%-5s %10d %14.9f %14.9f\n", "HMW", hmw.winding, hmw.value,
                closed_form_phase(PhaseKind::HMW, 1.0, 1.0, u));
    std::printf("%-5s %10d %14.9f %14.9f\n", "AC", ac.winding, ac.value,
                closed_form_phase(PhaseKind::AC, 1.0, 1.0, u));
    return 0;
}
