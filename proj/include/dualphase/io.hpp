#pragma once

// Text I/O shared by the CLI and tests: fixed-format scientific numbers,
// B-grid parsing, and the t,x,y,z path CSV format.
//
// Every numeric value is emitted as scientific notation with 9 significant
// digits ("%.8e", "." decimal), so identical inputs always produce
// byte-identical output.

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dualphase/errors.hpp"
#include "dualphase/path.hpp"

namespace dualphase {

inline std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.8e", v);
    return buf;
}

// "start:stop:count" -> inclusive linear grid with `count` points
// (count = 1 -> {start}); a bare number -> single-point grid.
inline std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    try {
        if (c1 == std::string::npos) {
            std::size_t used = 0;
            const double v = std::stod(spec, &used);
            if (used != spec.size())
                throw ConfigError("grid: trailing characters after number");
            return {v};
        }
        const auto c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw ConfigError("grid: expected start:stop:count");
        const double start = std::stod(spec.substr(0, c1));
        const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        const long count = std::stol(spec.substr(c2 + 1));
        if (count < 1)
            throw ConfigError("grid: count must be >= 1");
        std::vector<double> g;
        g.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            g.push_back(start);
        } else {
            for (long i = 0; i < count; ++i)
                g.push_back(start + (stop - start) * static_cast<double>(i) / (count - 1));
        }
        return g;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("grid: could not parse '" + spec + "' (want start:stop:count)");
    }
}

// Path CSV: one "t,x,y,z" row per sample, optional header line. The closed
// flag is set automatically when the endpoints coincide within the closure
// gap. Malformed content raises ConfigError (CLI exit code 2).
inline ParamPath load_path_csv(std::istream& in) {
    ParamPath p;
    std::string line;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        double vals[4];
        char sep = ',';
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            if (!(row >> vals[i])) ok = false;
            if (ok && i < 3 && !(row >> sep && sep == ',')) ok = false;
        }
        if (!ok) {
            if (first) { // tolerate a single header line
                first = false;
                continue;
            }
            throw ConfigError("path csv: malformed row at line " + std::to_string(lineno));
        }
        first = false;
        p.times.push_back(vals[0]);
        p.points.push_back({vals[1], vals[2], vals[3]});
    }
    if (p.points.size() < kMinPathSamples)
        throw ConfigError("path csv: fewer than 8 samples");
    p.closed = norm(p.points.back() - p.points.front()) < kClosureGap;
    return p;
}

inline void save_path_csv(std::ostream& out, const ParamPath& p) {
    out << "t,x,y,z\n";
    for (std::size_t i = 0; i < p.points.size(); ++i)
        out << format_sci(p.times[i]) << ',' << format_sci(p.points[i].x) << ','
            << format_sci(p.points[i].y) << ',' << format_sci(p.points[i].z) << '\n';
}

} // namespace dualphase
