// dualphase command-line front end.
//
// Subcommands: phase, dual, boost, quench, ramsey, selfcheck.
// Parameters come from an optional JSON config file (--config) overridden by
// flags; every run is deterministic, so identical configurations produce
// byte-identical output.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 configuration error,
// 3 domain error (on-axis path, open loop, overly fast boost, ...).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dualphase/dualphase.hpp"

namespace dp = dualphase;
using nlohmann::json;

namespace {

json load_config(const std::string& path) {
    if (path.empty())
        return json::object();
    std::ifstream f(path);
    if (!f)
        throw dp::ConfigError("cannot open config file: " + path);
    try {
        json j;
        f >> j;
        if (!j.is_object())
            throw dp::ConfigError("config root must be a JSON object");
        return j;
    } catch (const dp::ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw dp::ConfigError(std::string("config parse: ") + e.what());
    }
}

// A run carries exactly one subcommand payload; a config file may hold at most
// one payload section and it must match the invoked subcommand.
void check_payload_sections(const json& cfg, const std::string& invoked) {
    static const char* kPayloads[] = {"phase", "dual", "boost", "quench", "ramsey", "selfcheck"};
    std::string found;
    for (const char* p : kPayloads) {
        if (cfg.contains(p)) {
            if (!found.empty())
                throw dp::ConfigError("config holds more than one subcommand payload ('" + found +
                                      "' and '" + p + "')");
            found = p;
        }
    }
    if (!found.empty() && found != invoked)
        throw dp::ConfigError("config payload '" + found + "' does not match subcommand '" + invoked + "'");
}

json section_of(const json& cfg, const std::string& name) {
    if (!cfg.contains(name))
        return json::object();
    if (!cfg.at(name).is_object())
        throw dp::ConfigError("config section '" + name + "' must be an object");
    return cfg.at(name);
}

dp::PhysicalConstants constants_from(const json& cfg) {
    dp::PhysicalConstants k = dp::default_constants();
    const json c = section_of(cfg, "constants");
    for (auto it = c.begin(); it != c.end(); ++it) {
        double v = 0.0;
        if (!it.value().is_number())
            throw dp::ConfigError("constants." + it.key() + " must be a number");
        v = it.value().get<double>();
        const std::string& key = it.key();
        if (key == "c") k.c = v;
        else if (key == "hbar") k.hbar = v;
        else if (key == "e_charge") k.e_charge = v;
        else if (key == "a_bohr") k.a_bohr = v;
        else if (key == "alpha") k.alpha = v;
        else if (key == "m_e") k.m_e = v;
        else if (key == "tau_2s") k.tau_2s = v;
        else if (key == "tau_2p") k.tau_2p = v;
        else if (key == "B_res") k.B_res = v;
        else if (key == "d_ammonia") k.d_ammonia = v;
        else if (key == "omega_inv") k.omega_inv = v;
        else throw dp::ConfigError("unknown constants key: " + key);
    }
    try {
        k.validate();
    } catch (const std::exception& e) {
        throw dp::ConfigError(e.what());
    }
    return k;
}

dp::SelfcheckOptions tolerances_from(const json& cfg) {
    dp::SelfcheckOptions t;
    const json s = section_of(cfg, "tolerances");
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (!it.value().is_number())
            throw dp::ConfigError("tolerances." + it.key() + " must be a number");
        const double v = it.value().get<double>();
        if (it.key() == "quadrature_rel") t.quadrature_rel = v;
        else if (it.key() == "ode_rel") t.ode_rel = v;
        else throw dp::ConfigError("unknown tolerances key: " + it.key());
    }
    t.validate();
    return t;
}

// flag wins over config section, config over default
double pick_num(const CLI::Option* o, double flag_v, const json& sec, const char* key, double def) {
    if (o->count() > 0) return flag_v;
    if (sec.contains(key)) {
        if (!sec.at(key).is_number())
            throw dp::ConfigError(std::string("config key '") + key + "' must be a number");
        return sec.at(key).get<double>();
    }
    return def;
}

int pick_int(const CLI::Option* o, int flag_v, const json& sec, const char* key, int def) {
    if (o->count() > 0) return flag_v;
    if (sec.contains(key)) {
        if (!sec.at(key).is_number_integer())
            throw dp::ConfigError(std::string("config key '") + key + "' must be an integer");
        return sec.at(key).get<int>();
    }
    return def;
}

std::string pick_str(const CLI::Option* o, const std::string& flag_v, const json& sec,
                     const char* key, const std::string& def) {
    if (o->count() > 0) return flag_v;
    if (sec.contains(key)) {
        if (!sec.at(key).is_string())
            throw dp::ConfigError(std::string("config key '") + key + "' must be a string");
        return sec.at(key).get<std::string>();
    }
    return def;
}

dp::Vec3 parse_vec3(const std::string& s) {
    dp::Vec3 v;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> v.x >> c1 >> v.y >> c2 >> v.z) || c1 != ',' || c2 != ',' || (in >> std::ws, !in.eof()))
        throw dp::ConfigError("expected vector as x,y,z: '" + s + "'");
    return v;
}

std::vector<double> grid_from(const CLI::Option* o, const std::string& flag_v, const json& sec,
                              const std::string& def) {
    if (o->count() > 0) return dp::parse_grid(flag_v);
    if (sec.contains("grid")) {
        const json& g = sec.at("grid");
        if (g.is_string()) return dp::parse_grid(g.get<std::string>());
        if (g.is_array()) {
            std::vector<double> out;
            for (const auto& e : g) {
                if (!e.is_number())
                    throw dp::ConfigError("grid array entries must be numbers");
                out.push_back(e.get<double>());
            }
            if (out.empty())
                throw dp::ConfigError("grid array must not be empty");
            return out;
        }
        throw dp::ConfigError("grid must be a 'start:stop:count' string or an array of numbers");
    }
    return dp::parse_grid(def);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw dp::ConfigError("cannot open output file: " + out_path);
    f << content;
}

std::string vec_csv(const dp::Vec3& v) {
    return dp::format_sci(v.x) + ',' + dp::format_sci(v.y) + ',' + dp::format_sci(v.z);
}

// ---------------------------------------------------------------------------
// phase
// ---------------------------------------------------------------------------

struct PhaseArgs {
    std::string kind, geometry, path_file, out;
    double radius, semi_major, semi_minor, half_side, probe, source;
    dp::Vec3 center;
    int turns, samples;
    bool reduced;
};

int run_phase(const PhaseArgs& a, const dp::PhysicalConstants& consts, const dp::SelfcheckOptions& tol) {
    dp::PhaseKind kind;
    if (a.kind == "AB") kind = dp::PhaseKind::AB;
    else if (a.kind == "AC") kind = dp::PhaseKind::AC;
    else if (a.kind == "DAB") kind = dp::PhaseKind::DAB;
    else if (a.kind == "HMW") kind = dp::PhaseKind::HMW;
    else throw dp::ConfigError("phase: kind must be one of AB, AC, DAB, HMW");

    const dp::Units units = a.reduced ? dp::Units::reduced() : dp::Units::from(consts);

    dp::ParamPath path;
    if (!a.path_file.empty()) {
        std::ifstream f(a.path_file);
        if (!f)
            throw dp::ConfigError("cannot open path file: " + a.path_file);
        path = dp::load_path_csv(f);
    } else if (a.geometry == "circle") {
        path = dp::make_circle(a.radius, a.samples, a.turns, 1.0, a.center);
    } else if (a.geometry == "ellipse") {
        path = dp::make_ellipse(a.semi_major, a.semi_minor, a.samples, a.turns, 1.0, a.center);
    } else if (a.geometry == "square") {
        path = dp::make_square(a.half_side, a.samples, a.turns, 1.0, a.center);
    } else {
        throw dp::ConfigError("phase: geometry must be circle, ellipse or square");
    }

    const dp::Vec3 axis{0.0, 0.0, 1.0};
    dp::PhaseResult r;
    double closed = 0.0;
    switch (kind) {
        case dp::PhaseKind::AB: {
            const dp::SourceConfig src = dp::mag_flux_tube(a.source, axis);
            r = dp::phase_ab_integral(path, a.probe, src, units, tol.quadrature_rel);
            break;
        }
        case dp::PhaseKind::DAB: {
            const dp::SourceConfig src = dp::elec_flux_tube(a.source, axis);
            r = dp::phase_dab_integral(path, a.probe, src, units, tol.quadrature_rel);
            break;
        }
        case dp::PhaseKind::HMW: {
            const dp::SourceConfig src = dp::monopole_line(a.source, axis);
            r = dp::phase_hmw_integral(path, axis * a.probe, src, units, tol.quadrature_rel);
            break;
        }
        case dp::PhaseKind::AC: {
            const dp::SourceConfig src = dp::charge_line(a.source, axis);
            r = dp::phase_ac_integral(path, axis * a.probe, src, units, tol.quadrature_rel);
            break;
        }
    }
    closed = dp::closed_form_phase(kind, a.probe, a.source, units, r.winding);
    // relative deviation where the closed form is nonzero, absolute otherwise
    const double dev = closed != 0.0 ? std::fabs(r.value - closed) / std::fabs(closed)
                                     : std::fabs(r.value);
    std::ostringstream os;
    os << "kind,winding,phase_numeric_rad,phase_closed_rad,rel_deviation\n";
    os << dp::to_string(kind) << ',' << r.winding << ',' << dp::format_sci(r.value) << ','
       << dp::format_sci(closed) << ',' << dp::format_sci(dev) << '\n';
    emit(a.out, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

dp::SourceKind parse_source_kind(const std::string& s) {
    if (s == "charge_line") return dp::SourceKind::ChargeLine;
    if (s == "monopole_line") return dp::SourceKind::MonopoleLine;
    if (s == "mag_flux_tube") return dp::SourceKind::MagFluxTube;
    if (s == "elec_flux_tube") return dp::SourceKind::ElecFluxTube;
    throw dp::ConfigError("unknown source kind: " + s +
                          " (want charge_line, monopole_line, mag_flux_tube or elec_flux_tube)");
}

const char* relation_note(dp::SourceKind k) {
    switch (k) {
        case dp::SourceKind::ChargeLine: return "phi_HMW = -phi_AC";
        case dp::SourceKind::MonopoleLine: return "phi_AC = -phi_HMW";
        case dp::SourceKind::MagFluxTube: return "phi_DAB = -phi_AB";
        case dp::SourceKind::ElecFluxTube: return "phi_AB = -phi_DAB";
    }
    return "?";
}

int run_dual(const dp::SourceConfig& src, const dp::Probe& probe, const std::string& out) {
    const auto [dsrc, dprobe] = dp::dualize_config(src, probe);
    std::ostringstream os;
    os << "section,kind,strength,probe_e,probe_g,probe_d_x,probe_d_y,probe_d_z,"
          "probe_m_x,probe_m_y,probe_m_z\n";
    auto row = [&](const char* tag, const dp::SourceConfig& s, const dp::Probe& p) {
        os << tag << ',' << dp::to_string(s.kind) << ',' << dp::format_sci(s.strength) << ','
           << dp::format_sci(p.e) << ',' << dp::format_sci(p.g) << ',' << vec_csv(p.d) << ','
           << vec_csv(p.m) << '\n';
    };
    row("before", src, probe);
    row("after", dsrc, dprobe);
    os << "relation," << relation_note(src.kind) << '\n';
    emit(out, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// boost
// ---------------------------------------------------------------------------

int run_boost(const dp::EMField& f, const dp::Potentials& pot, const dp::Vec3& v, double c,
              const std::string& out) {
    const dp::EMField fp = dp::boost_fields(f, v, c);
    const dp::Potentials pp = dp::boost_potentials(pot, v, c);
    std::ostringstream os;
    os << "quantity,value_1,value_2,value_3\n";
    os << "E_prime," << vec_csv(fp.E) << '\n';
    os << "B_prime," << vec_csv(fp.B) << '\n';
    os << "V_prime," << dp::format_sci(pp.V) << ",,\n";
    os << "A_prime," << vec_csv(pp.A) << '\n';
    os << "V_dual_prime," << dp::format_sci(pp.V_dual) << ",,\n";
    os << "A_dual_prime," << vec_csv(pp.A_dual) << '\n';
    emit(out, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// quench / ramsey scans
// ---------------------------------------------------------------------------

int run_quench(const dp::BeamParams& base, const std::vector<double>& grid, const std::string& out) {
    const auto rows = dp::scan_transmission(base, grid);
    std::ostringstream os;
    os << "B_gauss,phi_hmw_rad,gamma_per_s,transmission,validity_flag\n";
    for (const auto& r : rows)
        os << dp::format_sci(r.B) << ',' << dp::format_sci(r.phi_hmw) << ','
           << dp::format_sci(r.gamma) << ',' << dp::format_sci(r.transmission) << ','
           << (r.validity_warning ? 1 : 0) << '\n';
    emit(out, os.str());
    return 0;
}

int run_ramsey(const dp::RamseyParams& base, const std::vector<double>& grid, const std::string& out) {
    const auto rows = dp::scan_fringes(base, grid);
    std::ostringstream os;
    os << "B_gauss,phi_rad,population\n";
    for (const auto& r : rows)
        os << dp::format_sci(r.B) << ',' << dp::format_sci(r.phi) << ','
           << dp::format_sci(r.population) << '\n';
    emit(out, os.str());
    return 0;
}

// ---------------------------------------------------------------------------
// selfcheck
// ---------------------------------------------------------------------------

int run_selfcheck_cmd(const dp::PhysicalConstants& consts, const dp::SelfcheckOptions& tol,
                      const std::string& out) {
    const auto results = dp::run_selfcheck(consts, tol);
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << " -- " << r.detail
           << '\n';
        if (!r.passed) ++failed;
    }
    os << "selfcheck: " << (results.size() - failed) << '/' << results.size() << " checks passed\n";
    emit(out, os.str());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dualphase: topological-phase and HMW-experiment toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    app.add_option("--config", config_path, "JSON configuration file")->expected(1);

    // phase
    auto* sc_phase = app.add_subcommand("phase", "topological phase of a loop, numeric and closed form");
    PhaseArgs pa{};
    std::string pa_center = "0,0,0";
    auto* o_kind = sc_phase->add_option("--kind", pa.kind, "AB, AC, DAB or HMW");
    auto* o_geom = sc_phase->add_option("--geometry", pa.geometry, "circle, ellipse or square");
    auto* o_radius = sc_phase->add_option("--radius", pa.radius, "circle radius, cm");
    auto* o_major = sc_phase->add_option("--semi-major", pa.semi_major, "ellipse semi-major, cm");
    auto* o_minor = sc_phase->add_option("--semi-minor", pa.semi_minor, "ellipse semi-minor, cm");
    auto* o_half = sc_phase->add_option("--half-side", pa.half_side, "square half side, cm");
    auto* o_center = sc_phase->add_option("--center", pa_center, "loop center as x,y,z");
    auto* o_turns = sc_phase->add_option("--turns", pa.turns, "revolutions (negative = clockwise)");
    auto* o_samples = sc_phase->add_option("--samples", pa.samples, "samples per revolution");
    auto* o_probe = sc_phase->add_option("--probe", pa.probe, "probe strength (charge or axis dipole)");
    auto* o_source = sc_phase->add_option("--source", pa.source, "source strength (flux or line density)");
    auto* o_pathfile = sc_phase->add_option("--path-file", pa.path_file, "path CSV (t,x,y,z rows)");
    bool phase_reduced_flag = false;
    auto* o_reduced = sc_phase->add_flag("--reduced-units", phase_reduced_flag, "use hbar = c = 1");
    sc_phase->add_option("--out", out_path, "output file (default stdout)");

    // dual
    auto* sc_dual = app.add_subcommand("dual", "apply the duality map to a source/probe configuration");
    std::string du_kind = "charge_line";
    double du_strength = 1.0, du_e = 0.0, du_g = 0.0;
    std::string du_d = "0,0,0", du_m = "0,0,0";
    auto* o_dkind = sc_dual->add_option("--source-kind", du_kind, "charge_line, monopole_line, mag_flux_tube, elec_flux_tube");
    auto* o_dstrength = sc_dual->add_option("--strength", du_strength, "source strength");
    auto* o_de = sc_dual->add_option("--probe-e", du_e, "probe electric charge");
    auto* o_dg = sc_dual->add_option("--probe-g", du_g, "probe monopole charge");
    auto* o_dd = sc_dual->add_option("--probe-d", du_d, "probe electric dipole x,y,z");
    auto* o_dm = sc_dual->add_option("--probe-m", du_m, "probe magnetic dipole x,y,z");
    sc_dual->add_option("--out", out_path, "output file (default stdout)");

    // boost
    auto* sc_boost = app.add_subcommand("boost", "first-order Lorentz boost of fields and potentials");
    std::string bo_E = "0,0,0", bo_B = "0,0,0", bo_v = "0,0,0", bo_A = "0,0,0", bo_Ad = "0,0,0";
    double bo_V = 0.0, bo_Vd = 0.0;
    bool boost_reduced_flag = false;
    auto* o_bE = sc_boost->add_option("--efield", bo_E, "lab E field x,y,z (statvolt/cm)");
    auto* o_bB = sc_boost->add_option("--bfield", bo_B, "lab B field x,y,z (G)");
    auto* o_bv = sc_boost->add_option("--velocity", bo_v, "boost velocity x,y,z (cm/s)");
    auto* o_bV = sc_boost->add_option("--scalar-potential", bo_V, "lab V (statvolt)");
    auto* o_bA = sc_boost->add_option("--vector-potential", bo_A, "lab A x,y,z (G cm)");
    auto* o_bVd = sc_boost->add_option("--dual-scalar-potential", bo_Vd, "lab V_dual");
    auto* o_bAd = sc_boost->add_option("--dual-vector-potential", bo_Ad, "lab A_dual x,y,z");
    auto* o_bred = sc_boost->add_flag("--reduced-units", boost_reduced_flag, "use c = 1");
    sc_boost->add_option("--out", out_path, "output file (default stdout)");

    // quench
    auto* sc_quench = app.add_subcommand("quench", "hydrogen 2s transmission scan over a B grid");
    double qu_v = 0.0, qu_L = 0.0;
    std::string qu_grid;
    auto* o_qv = sc_quench->add_option("--v", qu_v, "beam speed, cm/s");
    auto* o_qL = sc_quench->add_option("--length", qu_L, "field region length, cm");
    auto* o_qgrid = sc_quench->add_option("--grid", qu_grid, "B grid, start:stop:count (G)");
    sc_quench->add_option("--out", out_path, "output file (default stdout)");

    // ramsey
    auto* sc_ramsey = app.add_subcommand("ramsey", "ammonia Ramsey fringe scan over a B grid");
    double ra_d = 0.0, ra_v = 0.0, ra_L = 0.0, ra_eps = 0.0, ra_read = 0.0;
    std::string ra_grid;
    auto* o_rd = sc_ramsey->add_option("--dipole", ra_d, "ammonia dipole moment, esu cm");
    auto* o_rv = sc_ramsey->add_option("--v", ra_v, "beam speed, cm/s");
    auto* o_rL = sc_ramsey->add_option("--length", ra_L, "field region length, cm");
    auto* o_rgrid = sc_ramsey->add_option("--grid", ra_grid, "B grid, start:stop:count (G)");
    auto* o_reps = sc_ramsey->add_option("--pulse-area-error", ra_eps, "fractional pi/2 area error");
    auto* o_rread = sc_ramsey->add_option("--readout-detuning-phase", ra_read, "extra phase delta*T, rad");
    sc_ramsey->add_option("--out", out_path, "output file (default stdout)");

    // selfcheck
    auto* sc_self = app.add_subcommand("selfcheck", "run the built-in verification battery");
    sc_self->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        const json cfg = load_config(config_path);
        const dp::PhysicalConstants consts = constants_from(cfg);
        const dp::SelfcheckOptions tol = tolerances_from(cfg);

        if (sc_phase->parsed()) {
            check_payload_sections(cfg, "phase");
            const json sec = section_of(cfg, "phase");
            pa.kind = pick_str(o_kind, pa.kind, sec, "kind", "AB");
            pa.geometry = pick_str(o_geom, pa.geometry, sec, "geometry", "circle");
            pa.radius = pick_num(o_radius, pa.radius, sec, "radius", 1.0);
            pa.semi_major = pick_num(o_major, pa.semi_major, sec, "semi_major", 1.5);
            pa.semi_minor = pick_num(o_minor, pa.semi_minor, sec, "semi_minor", 0.75);
            pa.half_side = pick_num(o_half, pa.half_side, sec, "half_side", 1.0);
            pa.center = parse_vec3(pick_str(o_center, pa_center, sec, "center", "0,0,0"));
            pa.turns = pick_int(o_turns, pa.turns, sec, "turns", 1);
            pa.samples = pick_int(o_samples, pa.samples, sec, "samples", 4096);
            const bool flux_kind = pa.kind == "AB" || pa.kind == "DAB";
            pa.probe = pick_num(o_probe, pa.probe, sec, "probe", 1.0);
            pa.source = pick_num(o_source, pa.source, sec, "source", flux_kind ? 2.0 * M_PI : 1.0);
            pa.path_file = pick_str(o_pathfile, pa.path_file, sec, "path_file", "");
            pa.reduced = o_reduced->count() > 0 ? phase_reduced_flag : sec.value("reduced_units", true);
            pa.out = out_path;
            return run_phase(pa, consts, tol);
        }
        if (sc_dual->parsed()) {
            check_payload_sections(cfg, "dual");
            const json sec = section_of(cfg, "dual");
            const dp::SourceKind kind =
                parse_source_kind(pick_str(o_dkind, du_kind, sec, "source_kind", "charge_line"));
            dp::SourceConfig src{kind, pick_num(o_dstrength, du_strength, sec, "strength", 1.0),
                                 {0.0, 0.0, 1.0}, {}};
            dp::Probe probe;
            probe.e = pick_num(o_de, du_e, sec, "probe_e", 0.0);
            probe.g = pick_num(o_dg, du_g, sec, "probe_g", 0.0);
            probe.d = parse_vec3(pick_str(o_dd, du_d, sec, "probe_d", "0,0,0"));
            probe.m = parse_vec3(pick_str(o_dm, du_m, sec, "probe_m", "0,0,1"));
            return run_dual(src, probe, out_path);
        }
        if (sc_boost->parsed()) {
            check_payload_sections(cfg, "boost");
            const json sec = section_of(cfg, "boost");
            dp::EMField f;
            f.E = parse_vec3(pick_str(o_bE, bo_E, sec, "efield", "0,0,0"));
            f.B = parse_vec3(pick_str(o_bB, bo_B, sec, "bfield", "0,0,0"));
            dp::Potentials pot;
            pot.V = pick_num(o_bV, bo_V, sec, "scalar_potential", 0.0);
            pot.A = parse_vec3(pick_str(o_bA, bo_A, sec, "vector_potential", "0,0,0"));
            pot.V_dual = pick_num(o_bVd, bo_Vd, sec, "dual_scalar_potential", 0.0);
            pot.A_dual = parse_vec3(pick_str(o_bAd, bo_Ad, sec, "dual_vector_potential", "0,0,0"));
            const dp::Vec3 v = parse_vec3(pick_str(o_bv, bo_v, sec, "velocity", "0,0,0"));
            const bool reduced = o_bred->count() > 0 ? boost_reduced_flag : sec.value("reduced_units", false);
            return run_boost(f, pot, v, reduced ? 1.0 : consts.c, out_path);
        }
        if (sc_quench->parsed()) {
            check_payload_sections(cfg, "quench");
            const json sec = section_of(cfg, "quench");
            dp::BeamParams base{pick_num(o_qv, qu_v, sec, "v", 1e6),
                                pick_num(o_qL, qu_L, sec, "L", 1.0), 0.0, 0.0, consts};
            const std::vector<double> grid = grid_from(o_qgrid, qu_grid, sec, "0:200:41");
            return run_quench(base, grid, out_path);
        }
        if (sc_ramsey->parsed()) {
            check_payload_sections(cfg, "ramsey");
            const json sec = section_of(cfg, "ramsey");
            dp::RamseyParams base{pick_num(o_rd, ra_d, sec, "d_a", consts.d_ammonia),
                                  pick_num(o_rv, ra_v, sec, "v", 1e5),
                                  pick_num(o_rL, ra_L, sec, "L", 1.0),
                                  0.0,
                                  pick_num(o_reps, ra_eps, sec, "pulse_area_error", 0.0),
                                  pick_num(o_rread, ra_read, sec, "readout_detuning_phase", 0.0),
                                  consts};
            const std::vector<double> grid = grid_from(o_rgrid, ra_grid, sec, "0:100:51");
            return run_ramsey(base, grid, out_path);
        }
        if (sc_self->parsed()) {
            check_payload_sections(cfg, "selfcheck");
            return run_selfcheck_cmd(consts, tol, out_path);
        }
        throw dp::ConfigError("no subcommand given");
    } catch (const dp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const dp::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
