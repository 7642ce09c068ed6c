// Exercises the installed CLI binary end to end: output shape, determinism,
// config handling, and the documented exit codes.

#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DUALPHASE_CLI_PATH
#error "DUALPHASE_CLI_PATH must point at the dualphase binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DUALPHASE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

} // namespace

TEST_CASE("phase subcommand: AB on the built-in circle") {
    const RunResult r = run_cli("phase --kind AB --reduced-units");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("kind,winding,phase_numeric_rad,phase_closed_rad,rel_deviation\n") == 0);
    CHECK(r.out.find("AB,1,6.28318") != std::string::npos); // 2 pi to displayed digits
}

TEST_CASE("phase subcommand: non-enclosing loop reports winding 0") {
    const RunResult r = run_cli("phase --kind AB --reduced-units --center 3,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("AB,0,") != std::string::npos);
}

TEST_CASE("phase subcommand: HMW closed form -4 pi") {
    const RunResult r = run_cli("phase --kind HMW --reduced-units");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("HMW,1,-1.25663") != std::string::npos); // -12.566...e+00 mantissa
}

TEST_CASE("phase subcommand accepts a path file and flags a malformed one") {
    std::ostringstream csv;
    csv << "t,x,y,z\n";
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
        const double th = 2.0 * M_PI * i / n;
        csv << static_cast<double>(i) / n << ',' << std::cos(th) << ',' << std::sin(th) << ",0\n";
    }
    write_file("cli_path_ok.csv", csv.str());
    const RunResult ok = run_cli("phase --kind AB --reduced-units --path-file cli_path_ok.csv");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("AB,1,") != std::string::npos);

    write_file("cli_path_bad.csv", "t,x,y,z\n0,1,0\n0.1,oops\n");
    CHECK(run_cli("phase --kind AB --path-file cli_path_bad.csv").exit_code == 2);

    // loop through the source axis -> domain error
    std::ostringstream on_axis;
    on_axis << "t,x,y,z\n";
    for (int i = 0; i <= n; ++i) {
        const double th = 2.0 * M_PI * i / n;
        on_axis << static_cast<double>(i) / n << ',' << 1.0 + std::cos(th) << ',' << std::sin(th)
                << ",0\n";
    }
    write_file("cli_path_axis.csv", on_axis.str());
    CHECK(run_cli("phase --kind AB --reduced-units --path-file cli_path_axis.csv").exit_code == 3);
}

TEST_CASE("dual subcommand round-trips and notes the phase relation") {
    const RunResult r = run_cli("dual --source-kind charge_line --strength 1.5 --probe-m 0,0,0.25");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("before,charge_line,1.50000000e+00") != std::string::npos);
    CHECK(r.out.find("after,monopole_line,1.50000000e+00") != std::string::npos);
    CHECK(r.out.find("relation,phi_HMW = -phi_AC") != std::string::npos);
    // the former magnetic dipole shows up as the electric dipole of the dual
    CHECK(r.out.find("after,monopole_line,1.50000000e+00,0.00000000e+00,0.00000000e+00,"
                     "0.00000000e+00,0.00000000e+00,2.50000000e-01") != std::string::npos);

    const RunResult ab = run_cli("dual --source-kind mag_flux_tube --strength 6.28 --probe-e 1");
    CHECK(ab.out.find("after,elec_flux_tube") != std::string::npos);
    CHECK(ab.out.find("relation,phi_DAB = -phi_AB") != std::string::npos);
}

TEST_CASE("dual applied twice echoes the original configuration") {
    const RunResult once = run_cli("dual --source-kind charge_line --strength 1.5 --probe-m 0,0,0.25");
    // feed the dualized configuration back through the command
    const RunResult twice =
        run_cli("dual --source-kind monopole_line --strength 1.5 --probe-d 0,0,0.25 --probe-m 0,0,0");
    const std::string before = once.out.substr(once.out.find("before,"));
    const std::string after = twice.out.substr(twice.out.find("after,"));
    CHECK(before.substr(7, before.find('\n') - 7) == after.substr(6, after.find('\n') - 6));
}

TEST_CASE("boost subcommand computes the motional field") {
    const RunResult r =
        run_cli("boost --reduced-units --bfield 0,0,2 --velocity 0.001,0,0");
    CHECK(r.exit_code == 0);
    // E' = -v x B / c = (0, 0.002, 0)
    CHECK(r.out.find("E_prime,0.00000000e+00,2.00000000e-03,0.00000000e+00") != std::string::npos);
    CHECK(run_cli("boost --reduced-units --bfield 0,0,2 --velocity 0.5,0,0").exit_code == 3);
    CHECK(run_cli("boost --velocity nonsense").exit_code == 2);
}

TEST_CASE("quench subcommand reproduces the benchmark row") {
    const RunResult r = run_cli("quench --grid 1");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "B_gauss,phi_hmw_rad,gamma_per_s,transmission,validity_flag");
    CHECK(row.find("1.00000000e+00,2.41188513e-01,9.28030874e+01") == 0);
    CHECK(row.back() == '0'); // no validity warning at 1 G

    const RunResult r100 = run_cli("quench --grid 100:104:2");
    std::istringstream l2(r100.out);
    std::string h2, row100, row104;
    std::getline(l2, h2);
    std::getline(l2, row100);
    std::getline(l2, row104);
    CHECK(row100.find("1.00000000e+02,2.41188513e+01") == 0);
    // transmission brackets 1/e between 100 and 104 G
    CHECK(row100.find(",3.9") != std::string::npos);
    CHECK(row104.find(",3.6") != std::string::npos);
}

TEST_CASE("ramsey subcommand: P = 1 at zero field, phi = 4.65 at 100 G") {
    const RunResult r = run_cli("ramsey --grid 0:100:2");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row100;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row100);
    CHECK(header == "B_gauss,phi_rad,population");
    CHECK(row0 == "0.00000000e+00,0.00000000e+00,1.00000000e+00");
    CHECK(row100.find("1.00000000e+02,4.64965223e+00") == 0);
    CHECK(run_cli("ramsey --grid 10:x:3").exit_code == 2);
    CHECK(run_cli("quench --grid -5").exit_code == 2); // negative field grid
}

TEST_CASE("every subcommand is byte-deterministic across runs") {
    const char* cmds[] = {
        "phase --kind AC --reduced-units --geometry ellipse --semi-major 1.4 --semi-minor 0.7",
        "dual --source-kind monopole_line --strength 2 --probe-d 0,0,1",
        "boost --reduced-units --efield 1,0,0 --velocity 0,0.001,0",
        "quench --grid 0:200:9",
        "ramsey --grid 0:100:9",
        "selfcheck",
    };
    for (const char* cmd : cmds) {
        const RunResult a = run_cli(cmd);
        const RunResult b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("--out writes the same bytes as stdout") {
    const RunResult direct = run_cli("quench --grid 0:50:3");
    CHECK(run_cli("quench --grid 0:50:3 --out cli_quench.csv").exit_code == 0);
    std::ifstream f("cli_quench.csv", std::ios::binary);
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == direct.out);
}

TEST_CASE("selfcheck passes with default constants") {
    const RunResult r = run_cli("selfcheck");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("selfcheck: 11/11 checks passed") != std::string::npos);
}

TEST_CASE("selfcheck catches a broken constants override (exit 1)") {
    write_file("cli_bad_constants.json", R"({"constants": {"c": 5.99584916e10}})");
    const RunResult r = run_cli("--config cli_bad_constants.json selfcheck");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL  1") != std::string::npos);
}

TEST_CASE("config errors exit with code 2") {
    write_file("cli_zero_tol.json", R"({"tolerances": {"quadrature_rel": 0.0}})");
    CHECK(run_cli("--config cli_zero_tol.json selfcheck").exit_code == 2);

    write_file("cli_neg_const.json", R"({"constants": {"tau_2p": -1.0}})");
    CHECK(run_cli("--config cli_neg_const.json selfcheck").exit_code == 2);

    write_file("cli_two_payloads.json", R"({"quench": {}, "ramsey": {}})");
    CHECK(run_cli("--config cli_two_payloads.json quench").exit_code == 2);

    write_file("cli_wrong_payload.json", R"({"ramsey": {"L": 2.0}})");
    CHECK(run_cli("--config cli_wrong_payload.json quench").exit_code == 2);

    CHECK(run_cli("--config cli_does_not_exist.json selfcheck").exit_code == 2);
    CHECK(run_cli("phase --kind XY").exit_code == 2);
}

TEST_CASE("config file parameters apply, flags win over the file") {
    write_file("cli_ramsey.json", R"({"ramsey": {"L": 1.0, "grid": [100.0]}})");
    const RunResult file_only = run_cli("--config cli_ramsey.json ramsey");
    CHECK(file_only.exit_code == 0);
    CHECK(file_only.out.find("1.00000000e+02,4.64965223e+00") != std::string::npos);

    // flag overrides the grid from the file
    const RunResult flag_wins = run_cli("--config cli_ramsey.json ramsey --grid 0");
    CHECK(flag_wins.exit_code == 0);
    CHECK(flag_wins.out.find("0.00000000e+00,0.00000000e+00,1.00000000e+00") != std::string::npos);
}
