#include "eulerlab/fixtures.hpp"

#include <cmath>

namespace eulerlab {
namespace fixtures {

namespace {

Mat2 commutator(const Mat2& a, const Mat2& b) {
    return a * b * a.inverse() * b.inverse();
}

} // namespace

Mat2 axis_half_turn(const Mat2& h) {
    const double tr = h.trace();
    const double disc = tr * tr - 4.0;
    if (disc <= 0) throw Error("axis_half_turn needs a hyperbolic matrix");
    double u, v;
    if (std::abs(h.c) > 1e-12) {
        u = (h.a - h.d) / (2.0 * h.c);
        v = std::sqrt(disc) / (2.0 * std::abs(h.c));
    } else {
        u = h.b / (h.d - h.a);
        v = 1.0;
    }
    return {u / v, -(v + u * u / v), 1.0 / v, -u / v};
}

LiftedRep sanov_rep() {
    const Mat2 a{1, 2, 0, 1};
    const Mat2 b{1, 0, 2, 1};
    return LiftedRep::from_mobius(SurfacePresentation(1, 1), {a, b});
}

namespace {

LiftedRep doubled_torus(const Mat2& a, const Mat2& b) {
    const Mat2 h = commutator(a, b);
    const Mat2 e = axis_half_turn(h);
    const Mat2 ei = e.inverse();
    const Mat2 a2 = e * a * ei;
    const Mat2 b2 = e * b * ei;
    return LiftedRep::from_mobius(SurfacePresentation(2, 0), {a, b, a2, b2});
}

// square one-holed torus: orthogonal translation axes, tr a = tr b = 3;
// the commutator has trace -17/4 < -2, so the boundary is geodesic
std::pair<Mat2, Mat2> square_torus_pair() {
    const double lambda = 0.5 * (3.0 + std::sqrt(5.0));
    const double c = 1.5, s = std::sqrt(1.25);
    return {Mat2{lambda, 0, 0, 1.0 / lambda}, Mat2{c, s, s, c}};
}

// columns are eigenvectors of the hyperbolic h, larger |eigenvalue| first
Mat2 eigenframe(const Mat2& h) {
    const double tr = h.trace();
    const double s = std::sqrt(tr * tr - 4.0);
    const double l1 = 0.5 * (tr - (tr < 0 ? s : -s)); // |l1| >= 1
    const double l2 = 0.5 * (tr + (tr < 0 ? s : -s));
    const auto eigvec = [&](double l, double* x, double* y) {
        if (std::abs(h.b) > std::abs(h.c)) { *x = h.b; *y = l - h.a; }
        else { *x = l - h.d; *y = h.c; }
        const double n = std::hypot(*x, *y);
        *x /= n; *y /= n;
    };
    Mat2 p;
    eigvec(l1, &p.a, &p.c);
    eigvec(l2, &p.b, &p.d);
    return p;
}

} // namespace

LiftedRep geometric_genus2_rep() {
    const auto [a, b] = square_torus_pair();
    return doubled_torus(a, b);
}

LiftedRep square_torus_rep() {
    const auto [a, b] = square_torus_pair();
    return LiftedRep::from_mobius(SurfacePresentation(1, 1), {a, b});
}

LiftedRep glued_sanov_genus2_rep() {
    const Mat2 a{1, 2, 0, 1};
    const Mat2 b{1, 0, 2, 1};
    return doubled_torus(a, b);
}

LiftedRep glued_mixed_genus2_rep() {
    const auto [a1, b1] = square_torus_pair();
    const Mat2 h = commutator(a1, b1);

    // second torus with tr a' = 4 and the same commutator trace:
    // with orthogonal axes tr[a',b'] = x^2 + y^2 - x^2 y^2 / 4 - 2
    const double x = 4.0;
    const double y2 = (h.trace() - x * x + 2.0) / (1.0 - x * x / 4.0);
    const double cb = 0.5 * std::sqrt(y2), sb = std::sqrt(cb * cb - 1.0);
    const double lam = 0.5 * (x + std::sqrt(x * x - 4.0));
    const Mat2 a2{lam, 0, 0, 1.0 / lam};
    const Mat2 b2{cb, sb, sb, cb};
    const Mat2 h2 = commutator(a2, b2);

    // conjugate the second torus so its commutator becomes h exactly
    Mat2 p = eigenframe(h), q = eigenframe(h2);
    Mat2 c = p * q.inverse();
    if (c.det() < 0) { q.b = -q.b; q.d = -q.d; c = p * q.inverse(); }
    c = normalize_det(c);

    const Mat2 e = axis_half_turn(h);
    const Mat2 ei = e.inverse(), ci = c.inverse();
    const Mat2 a3 = e * c * a2 * ci * ei;
    const Mat2 b3 = e * c * b2 * ci * ei;
    return LiftedRep::from_mobius(SurfacePresentation(2, 0), {a1, b1, a3, b3});
}

} // namespace fixtures
} // namespace eulerlab
