#pragma once

// Sampled 3-D paths with timestamps, builders for the standard loop
// geometries, and winding numbers about a source axis.
//
// Paths are polylines: no spline interpolation, so results are deterministic
// functions of the sample set. Closed paths duplicate the first point at the
// end (gap below kClosureGap). Sampling must resolve the loop: the winding
// computation requires every segment to advance azimuth by less than pi.

#include <cmath>
#include <cstddef>
#include <vector>

#include "dualphase/errors.hpp"
#include "dualphase/em_sources.hpp"
#include "dualphase/vec3.hpp"

namespace dualphase {

inline constexpr double kClosureGap = 1e-9;       // cm
inline constexpr std::size_t kMinPathSamples = 8;

struct ParamPath {
    std::vector<Vec3> points;
    std::vector<double> times; // s, strictly increasing
    bool closed = false;

    std::size_t size() const { return points.size(); }
    std::size_t segment_count() const { return points.empty() ? 0 : points.size() - 1; }
    double duration() const { return times.back() - times.front(); }

    void validate() const {
        if (points.size() != times.size())
            throw PathError("ParamPath: points/times size mismatch");
        if (points.size() < kMinPathSamples)
            throw PathError("ParamPath: at least 8 samples required");
        for (std::size_t i = 0; i + 1 < times.size(); ++i)
            if (!(times[i + 1] > times[i]))
                throw NonMonotonicTimeError("ParamPath: timestamps must be strictly increasing");
        if (closed && norm(points.back() - points.front()) >= kClosureGap)
            throw NotClosedError("ParamPath: closed flag set but endpoints do not coincide");
    }

    void require_closed() const {
        validate();
        if (!closed)
            throw NotClosedError("operation requires a closed path");
    }
};

namespace detail {

// Deterministic orthonormal basis (u, w) perpendicular to a unit axis.
inline void plane_basis(const Vec3& axis, Vec3& u, Vec3& w) {
    const Vec3 seed = std::fabs(axis.x) <= 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    u = normalized(seed - axis * dot(seed, axis));
    w = cross(axis, u);
}

} // namespace detail

// Circle of given radius in the plane through `center` perpendicular to
// `axis`, traversed at uniform speed. `turns` full revolutions (negative =
// clockwise about the axis); `samples` segments per revolution; `period`
// seconds per revolution.
inline ParamPath make_circle(double radius, int samples = 4096, int turns = 1,
                             double period = 1.0, Vec3 center = {}, Vec3 axis = {0, 0, 1}) {
    if (radius <= 0.0 || samples < 8 || turns == 0 || period <= 0.0)
        throw PathError("make_circle: need radius > 0, samples >= 8, turns != 0, period > 0");
    Vec3 u, w;
    detail::plane_basis(normalized(axis), u, w);
    const int n_abs = std::abs(turns);
    const double sign = turns > 0 ? 1.0 : -1.0;
    ParamPath p;
    const std::size_t total = static_cast<std::size_t>(samples) * n_abs;
    p.points.reserve(total + 1);
    p.times.reserve(total + 1);
    for (std::size_t i = 0; i <= total; ++i) {
        const double theta = sign * 2.0 * M_PI * static_cast<double>(i) / samples;
        p.points.push_back(center + u * (radius * std::cos(theta)) + w * (radius * std::sin(theta)));
        p.times.push_back(period * static_cast<double>(i) / samples);
    }
    p.points.back() = p.points.front(); // exact closure
    p.closed = true;
    p.validate();
    return p;
}

// Axis-perpendicular ellipse with semi-axes (a, b), uniform in the angle
// parameter (speed varies along the loop).
inline ParamPath make_ellipse(double a, double b, int samples = 4096, int turns = 1,
                              double period = 1.0, Vec3 center = {}, Vec3 axis = {0, 0, 1}) {
    if (a <= 0.0 || b <= 0.0 || samples < 8 || turns == 0 || period <= 0.0)
        throw PathError("make_ellipse: need a, b > 0, samples >= 8, turns != 0, period > 0");
    Vec3 u, w;
    detail::plane_basis(normalized(axis), u, w);
    const int n_abs = std::abs(turns);
    const double sign = turns > 0 ? 1.0 : -1.0;
    ParamPath p;
    const std::size_t total = static_cast<std::size_t>(samples) * n_abs;
    p.points.reserve(total + 1);
    p.times.reserve(total + 1);
    for (std::size_t i = 0; i <= total; ++i) {
        const double theta = sign * 2.0 * M_PI * static_cast<double>(i) / samples;
        p.points.push_back(center + u * (a * std::cos(theta)) + w * (b * std::sin(theta)));
        p.times.push_back(period * static_cast<double>(i) / samples);
    }
    p.points.back() = p.points.front();
    p.closed = true;
    p.validate();
    return p;
}

// Axis-perpendicular square of half side `s`, sampled uniformly by arc length
// (uniform speed). samples must be divisible by 4 so corners land on samples.
inline ParamPath make_square(double half_side, int samples = 4096, int turns = 1,
                             double period = 1.0, Vec3 center = {}, Vec3 axis = {0, 0, 1}) {
    if (half_side <= 0.0 || samples < 8 || samples % 4 != 0 || turns == 0 || period <= 0.0)
        throw PathError("make_square: need half_side > 0, samples >= 8 divisible by 4, turns != 0, period > 0");
    Vec3 u, w;
    detail::plane_basis(normalized(axis), u, w);
    const double s = half_side;
    // Counter-clockwise corner cycle in the (u, w) plane.
    const double cu[4] = {s, -s, -s, s};
    const double cw[4] = {s, s, -s, -s};
    const int n_abs = std::abs(turns);
    const bool reverse = turns < 0;
    ParamPath p;
    const std::size_t total = static_cast<std::size_t>(samples) * n_abs;
    p.points.reserve(total + 1);
    p.times.reserve(total + 1);
    const int per_side = samples / 4;
    for (std::size_t i = 0; i <= total; ++i) {
        std::size_t j = i % static_cast<std::size_t>(samples);
        if (reverse) j = (static_cast<std::size_t>(samples) - j) % samples;
        const int side = static_cast<int>(j) / per_side;
        const double f = static_cast<double>(static_cast<int>(j) % per_side) / per_side;
        const int k0 = side, k1 = (side + 1) % 4;
        const double pu = cu[k0] + (cu[k1] - cu[k0]) * f;
        const double pw = cw[k0] + (cw[k1] - cw[k0]) * f;
        p.points.push_back(center + u * pu + w * pw);
        p.times.push_back(period * static_cast<double>(i) / samples);
    }
    p.points.back() = p.points.front();
    p.closed = true;
    p.validate();
    return p;
}

// Signed number of revolutions a closed path makes about the line through
// axis_point along axis: sum of per-segment azimuth increments over 2 pi,
// rounded. NonIntegerWindingError if the residual exceeds 1e-6 (undersampled
// or non-closed geometry).
inline int winding_number(const ParamPath& path, const Vec3& axis, const Vec3& axis_point,
                          double rho_min = kRhoMin) {
    path.require_closed();
    const Vec3 a = normalized(axis);
    Vec3 u, w;
    detail::plane_basis(a, u, w);
    double accum = 0.0;
    double prev_theta = 0.0;
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const Vec3 r = path.points[i] - axis_point;
        const Vec3 radial = r - a * dot(r, a);
        if (norm(radial) <= rho_min)
            throw OnAxisError("winding_number: path sample on the axis");
        const double theta = std::atan2(dot(radial, w), dot(radial, u));
        if (i > 0) {
            double dtheta = theta - prev_theta;
            if (dtheta > M_PI) dtheta -= 2.0 * M_PI;
            if (dtheta < -M_PI) dtheta += 2.0 * M_PI;
            accum += dtheta;
        }
        prev_theta = theta;
    }
    const double w_real = accum / (2.0 * M_PI);
    const double w_round = std::round(w_real);
    if (std::fabs(w_real - w_round) > 1e-6)
        throw NonIntegerWindingError("winding_number: accumulated azimuth not an integer multiple of 2 pi");
    return static_cast<int>(w_round);
}

} // namespace dualphase
