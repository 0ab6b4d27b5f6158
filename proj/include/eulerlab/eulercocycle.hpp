#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>

#include "eulerlab/lift.hpp"

namespace eulerlab {

// c_{x0}(f,g) = f~(g~(x0)) - (fg)~(x0) with ~ the standard lift at x0.
// Always 0 or 1; NotAnInteger when the residual from an integer exceeds 1e-6.
int integral_euler_cocycle(const Lift& f, const Lift& g, double x0 = 0.0);

struct TauValue {
    double value;
    double err; // sum of the three enclosure widths
};

// tau(f,g) = rott(f g) - rott(f) - rott(g); independent of the chosen lifts.
TauValue tau(const Lift& f, const Lift& g, double tol,
             const RotationOptions& opts = {});

// floor(alpha (n+m)) - floor(alpha n) - floor(alpha m).
// Floating-point floors; values of alpha*n near an integer are hazardous.
long floor_cocycle(double alpha, long n, long m);

// Exact version for alpha = p/q.
long floor_cocycle_rational(long long p, long long q, long n, long m);

// max over triples of |c(g2,g3) - c(g1 g2, g3) + c(g1, g2 g3) - c(g1,g2)|.
template <class T, class Eval, class Mul>
double cocycle_residual(Eval&& c, Mul&& mul, std::span<const std::array<T, 3>> triples) {
    double worst = 0;
    for (const auto& [g1, g2, g3] : triples) {
        const double r = static_cast<double>(c(g2, g3)) -
                         static_cast<double>(c(mul(g1, g2), g3)) +
                         static_cast<double>(c(g1, mul(g2, g3))) -
                         static_cast<double>(c(g1, g2));
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

} // namespace eulerlab
