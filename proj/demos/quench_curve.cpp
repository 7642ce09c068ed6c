// Prints the hydrogen 2s transmission curve for the benchmark beam
// (v = 1e6 cm/s through a 1 cm field region). The 1/e point sits near 104 G.

#include <cstdio>
#include <vector>

#include "dualphase/dualphase.hpp"

using namespace dualphase;

int main() {
    BeamParams beam{1e6, 1.0, 0.0};
    std::vector<double> grid;
    for (int b = 0; b <= 200; b += 10)
        grid.push_back(b);

    std::printf("%8s %12s %14s %14s\n", "B (G)", "phi (rad)", "gamma (1/s)", "transmission");
    for (const QuenchScanRow& r : scan_transmission(beam, grid))
        std::printf("%8.1f %12.4f %14.4e %14.6f\n", r.B, r.phi_hmw, r.gamma, r.transmission);

    std::printf("\n1/e field: %.2f G\n", solve_transmission_field(beam));
    return 0;
}
