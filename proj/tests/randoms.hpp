#pragma once

// Random circle maps and matrices shared by the unit and acceptance tests.

#include <array>
#include <vector>

#include "eulerlab/ivanovturaev.hpp"
#include "eulerlab/lift.hpp"
#include "eulerlab/rng.hpp"

namespace eltest {

using namespace eulerlab;

inline Mat2 random_mobius(Rng& rng) {
    for (;;) {
        const Mat2 m{rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
        if (m.det() > 0.1) return normalize_det(m);
    }
}

inline Mat2 rotation_matrix(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c, -s, s, c};
}

// elliptic with boundary rotation number theta (theta in (0,1))
inline Mat2 random_elliptic(Rng& rng, double theta) {
    const Mat2 c = random_mobius(rng);
    return normalize_det(c * rotation_matrix(3.14159265358979323846 * theta) * c.inverse());
}

// strictly increasing cumulative profile from 0 with the given span
inline std::vector<double> increasing_profile(Rng& rng, int m, double span) {
    std::vector<double> out(m);
    double acc = 0;
    for (int i = 0; i < m; ++i) {
        out[i] = acc;
        acc += 0.05 + rng.uniform01();
    }
    const double last = out[m - 1];
    if (last > 0)
        for (double& v : out) v *= span / last;
    return out;
}

inline Lift random_pl(Rng& rng, int max_breaks = 6) {
    const int m = 2 + static_cast<int>(rng.uniform01() * (max_breaks - 1));
    const auto xs = increasing_profile(rng, m, 0.5 + 0.45 * rng.uniform01());
    const auto ys = increasing_profile(rng, m, 0.5 + 0.45 * rng.uniform01());
    const double y0 = rng.uniform(-0.5, 0.5);
    std::vector<std::array<double, 2>> pts(m);
    for (int i = 0; i < m; ++i) pts[i] = {xs[i], y0 + ys[i]};
    return Lift::piecewise_linear(pts);
}

inline Lift random_mobius_lift(Rng& rng) { return Lift::mobius(random_mobius(rng), 0); }

// rotation, PL, Mobius or a short composite of those
inline Lift random_lift(Rng& rng, int depth = 1) {
    const double pick = rng.uniform01();
    if (depth > 0 && pick < 0.3)
        return compose(random_lift(rng, depth - 1), random_lift(rng, depth - 1));
    if (pick < 0.55) return random_pl(rng);
    if (pick < 0.8) return random_mobius_lift(rng);
    return Lift::rotation(rng.uniform(-1.5, 1.5));
}

inline MatN random_gl_pos(Rng& rng, int dim) {
    for (;;) {
        MatN m(dim, VecN(dim));
        for (auto& row : m)
            for (auto& x : row) x = rng.gaussian();
        const double d = mat_det(m);
        if (std::abs(d) < 0.05) continue;
        if (d < 0) {
            for (int i = 0; i < dim; ++i) std::swap(m[i][0], m[i][1]);
        }
        return m;
    }
}

inline std::vector<VecN> random_gaussian_tuple(Rng& rng, int dim, int count) {
    std::vector<VecN> v(count, VecN(dim));
    for (auto& vec : v)
        for (auto& x : vec) x = rng.gaussian();
    return v;
}

} // namespace eltest
