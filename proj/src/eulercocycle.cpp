#include "eulerlab/eulercocycle.hpp"

namespace eulerlab {

int integral_euler_cocycle(const Lift& f, const Lift& g, double x0) {
    const Lift fs = standard_lift(f, x0);
    const Lift gs = standard_lift(g, x0);
    const Lift hs = standard_lift(compose(f, g), x0);
    const double v = fs(gs(x0)) - hs(x0);
    const long long c = std::llround(v);
    if (std::abs(v - static_cast<double>(c)) > 1e-6)
        throw NotAnInteger("Euler cocycle value " + std::to_string(v) +
                           " is not within 1e-6 of an integer");
    return static_cast<int>(c);
}

TauValue tau(const Lift& f, const Lift& g, double tol, const RotationOptions& opts) {
    if (!(tol > 0)) throw Error("tau needs tol > 0");
    const double each = tol / 3.0;
    const Enclosure efg = translation_number(compose(f, g), each, opts);
    const Enclosure ef = translation_number(f, each, opts);
    const Enclosure eg = translation_number(g, each, opts);
    return {efg.mid() - ef.mid() - eg.mid(),
            efg.width() + ef.width() + eg.width()};
}

long floor_cocycle(double alpha, long n, long m) {
    const double a = alpha;
    return static_cast<long>(std::floor(a * static_cast<double>(n + m)) -
                             std::floor(a * static_cast<double>(n)) -
                             std::floor(a * static_cast<double>(m)));
}

namespace {
long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}
} // namespace

long floor_cocycle_rational(long long p, long long q, long n, long m) {
    if (q == 0) throw Error("floor_cocycle_rational needs q != 0");
    if (q < 0) { p = -p; q = -q; }
    return static_cast<long>(floor_div(p * (n + m), q) - floor_div(p * n, q) -
                             floor_div(p * m, q));
}

} // namespace eulerlab
