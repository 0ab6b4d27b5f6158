#include "eulerlab/lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace eulerlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Node = Lift::Node;
using Kind = Node::Kind;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_rotation(double alpha) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Rotation;
    n->alpha = alpha;
    return n;
}

NodePtr make_translate(long k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Translate;
    n->k = k;
    return n;
}

bool translation_node(const Node& n, double* t) {
    if (n.kind == Kind::Rotation) { *t = n.alpha; return true; }
    if (n.kind == Kind::Translate) { *t = static_cast<double>(n.k); return true; }
    return false;
}

bool integral(double t, long* k) {
    if (std::abs(t) > 1e15 || t != std::floor(t)) return false;
    *k = static_cast<long>(t);
    return true;
}

// Projective angle of m applied to the direction of angle pi*u, in [0,1).
double proj_angle(const Mat2& m, double u) {
    const double cx = std::cos(kPi * u), sx = std::sin(kPi * u);
    double wx = m.a * cx + m.b * sx;
    double wy = m.c * cx + m.d * sx;
    if (wy < 0 || (wy == 0 && wx < 0)) { wx = -wx; wy = -wy; }
    double t = std::atan2(wy, wx) / kPi;
    if (t >= 1.0) t -= 1.0;
    if (t < 0.0) t = 0.0;
    return t;
}

double mobius_eval(const Mat2& m, long branch, double x) {
    double kf = std::floor(x);
    double u = x - kf;
    if (u >= 1.0) { u = 0.0; kf += 1.0; }
    const double a0 = proj_angle(m, 0.0);
    const double au = proj_angle(m, u);
    // The continuous lift starting at a0 wraps past 1 exactly once per period.
    const double lift = (au < a0) ? au + 1.0 : au;
    return kf + static_cast<double>(branch) + lift;
}

double pl_eval(const Node& n, double x) {
    const auto& xs = n.xs;
    const auto& ys = n.ys;
    const double x0 = xs.front();
    double kf = std::floor(x - x0);
    double u = x - kf;
    if (u >= x0 + 1.0) { u = x0; kf += 1.0; }
    if (u < x0) { u = x0; }
    // last i with xs[i] <= u
    auto it = std::upper_bound(xs.begin(), xs.end(), u);
    const size_t i = static_cast<size_t>(it - xs.begin()) - 1;
    double x1 = xs[i], y1 = ys[i], x2, y2;
    if (i + 1 < xs.size()) {
        x2 = xs[i + 1];
        y2 = ys[i + 1];
    } else {
        x2 = xs.front() + 1.0;
        y2 = ys.front() + 1.0;
    }
    const double t = (u - x1) / (x2 - x1);
    return kf + static_cast<double>(n.shift) + y1 + t * (y2 - y1);
}

double eval_node(const Node& n, double x) {
    switch (n.kind) {
        case Kind::Rotation: return x + n.alpha;
        case Kind::Translate: return x + static_cast<double>(n.k);
        case Kind::PL: return pl_eval(n, x);
        case Kind::Mobius: return mobius_eval(n.m, n.branch, x);
        case Kind::Compose: return eval_node(*n.lhs, eval_node(*n.rhs, x));
    }
    return x;
}

bool mobius_entries_safe(const Mat2& m) {
    const double lim = 1e100;
    return std::abs(m.a) < lim && std::abs(m.b) < lim && std::abs(m.c) < lim &&
           std::abs(m.d) < lim;
}

NodePtr make_translation_like(double t) {
    long k;
    if (integral(t, &k)) return make_translate(k);
    return make_rotation(t);
}

// Rotation-form matrices act as exact parameter translations; collapsing
// them keeps SO(2)-valued words on the exact path.
NodePtr make_mobius_node(const Mat2& m, long branch, bool approx = false) {
    if (m.a == m.d && m.b == -m.c)
        return make_translation_like(static_cast<double>(branch) + proj_angle(m, 0.0));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mobius;
    n->m = m;
    n->branch = branch;
    n->approx = approx;
    return n;
}

NodePtr compose_nodes(const NodePtr& lhs, const NodePtr& rhs) {
    double tl, tr;
    const bool lt = translation_node(*lhs, &tl);
    const bool rt = translation_node(*rhs, &tr);
    if (lt && rt) {
        long kl, kr;
        if (integral(tl, &kl) && integral(tr, &kr)) return make_translate(kl + kr);
        return make_rotation(tl + tr);
    }
    long k;
    if (lt && integral(tl, &k)) {
        if (k == 0) return rhs;
        if (rhs->kind == Kind::Mobius) {
            auto n = std::make_shared<Node>(*rhs);
            n->branch += k;
            return n;
        }
        if (rhs->kind == Kind::PL) {
            auto n = std::make_shared<Node>(*rhs);
            n->shift += k;
            return n;
        }
    }
    if (rt && integral(tr, &k)) {
        // f(x + k) = f(x) + k for every lift
        if (k == 0) return lhs;
        if (lhs->kind == Kind::Mobius) {
            auto n = std::make_shared<Node>(*lhs);
            n->branch += k;
            return n;
        }
        if (lhs->kind == Kind::PL) {
            auto n = std::make_shared<Node>(*lhs);
            n->shift += k;
            return n;
        }
    }
    if (lt && rhs->kind == Kind::Rotation)
        return make_rotation(tl + rhs->alpha);
    if (rt && lhs->kind == Kind::Rotation)
        return make_rotation(lhs->alpha + tr);
    if (lhs->kind == Kind::Mobius && rhs->kind == Kind::Mobius) {
        const Mat2 prod = lhs->m * rhs->m;
        if (mobius_entries_safe(prod) && prod.det() > 1e-12) {
            const Mat2 mm = normalize_det(prod);
            const double v = eval_node(*lhs, eval_node(*rhs, 0.0));
            const double raw = mobius_eval(mm, 0, 0.0);
            const NodePtr n = make_mobius_node(mm, std::llround(v - raw), true);
            // near-parabolic squarings drift; only keep merges that agree
            // with the true composite pointwise
            bool faithful = true;
            for (double x : {0.0, 0.37, 0.71, 0.93}) {
                const double want = eval_node(*lhs, eval_node(*rhs, x));
                if (std::abs(eval_node(*n, x) - want) >
                    1e-11 * (1.0 + std::abs(want))) {
                    faithful = false;
                    break;
                }
            }
            if (faithful) return n;
        }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->lhs = lhs;
    n->rhs = rhs;
    n->approx = lhs->approx || rhs->approx;
    return n;
}

NodePtr invert_node(const NodePtr& p,
                    std::unordered_map<const Node*, NodePtr>& memo) {
    auto hit = memo.find(p.get());
    if (hit != memo.end()) return hit->second;
    NodePtr out;
    switch (p->kind) {
        case Kind::Rotation:
            out = make_rotation(-p->alpha);
            break;
        case Kind::Translate:
            out = make_translate(-p->k);
            break;
        case Kind::PL: {
            auto n = std::make_shared<Node>();
            n->kind = Kind::PL;
            n->xs = p->ys;
            n->ys = p->xs;
            n->shift = -p->shift;
            // re-canonicalize so xs starts in [0,1)
            const double t = std::floor(n->xs.front());
            if (t != 0.0) {
                for (auto& v : n->xs) v -= t;
                for (auto& v : n->ys) v -= t;
            }
            out = n;
            break;
        }
        case Kind::Mobius: {
            const Mat2 minv = normalize_det(p->m.inverse());
            Node probe;
            probe.kind = Kind::Mobius;
            probe.m = minv;
            probe.branch = 0;
            // fix the branch so that (f o f^{-1})(0) = 0
            const double v = eval_node(*p, eval_node(probe, 0.0));
            out = make_mobius_node(minv, -std::llround(v), p->approx);
            break;
        }
        case Kind::Compose:
            out = compose_nodes(invert_node(p->rhs, memo), invert_node(p->lhs, memo));
            break;
    }
    memo.emplace(p.get(), out);
    return out;
}

void validate_pl(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.empty()) throw NonMonotonePL("piecewise-linear lift needs at least one breakpoint");
    for (size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
            throw NonMonotonePL("non-finite breakpoint");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw NonMonotonePL("breakpoint abscissae must be strictly increasing");
        if (i > 0 && !(ys[i] > ys[i - 1]))
            throw NonMonotonePL("breakpoint values must be strictly increasing");
    }
    if (!(xs.back() - xs.front() < 1.0))
        throw NonMonotonePL("breakpoints must span less than one period");
    if (!(ys.back() - ys.front() < 1.0))
        throw NonMonotonePL("breakpoint values must span less than one period");
}

} // namespace

Mat2 normalize_det(const Mat2& m) {
    const double dt = m.det();
    if (!std::isfinite(dt) || dt <= 1e-12)
        throw SingularMatrix("matrix determinant must be positive");
    const double s = std::sqrt(dt);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

MobiusClass mobius_classify(const Mat2& m, double eps_tr) {
    Mat2 u = m;
    const double dt = m.det();
    if (!std::isfinite(dt) || dt <= 1e-12)
        throw SingularMatrix("matrix determinant must be positive");
    if (std::abs(dt - 1.0) > 1e-9) u = normalize_det(m);
    const double tr = u.trace();
    if (std::abs(tr) > 2.0 + eps_tr) return {MobiusKind::Hyperbolic, tr};
    if (std::abs(tr) < 2.0 - eps_tr) return {MobiusKind::Elliptic, tr};
    const double eps_id = std::max(eps_tr, 1e-12);
    if (std::abs(u.b) <= eps_id && std::abs(u.c) <= eps_id &&
        std::abs(u.a - u.d) <= eps_id)
        return {MobiusKind::Identity, tr};
    return {MobiusKind::Parabolic, tr};
}

Lift::Lift() : node_(make_translate(0)) {}

Lift Lift::rotation(double alpha) {
    if (!std::isfinite(alpha)) throw Error("rotation amount must be finite");
    long k;
    if (integral(alpha, &k)) return Lift(make_translate(k));
    return Lift(make_rotation(alpha));
}

Lift Lift::translation(long k) { return Lift(make_translate(k)); }

Lift Lift::piecewise_linear(std::vector<std::array<double, 2>> points, long shift) {
    std::sort(points.begin(), points.end(),
              [](const auto& p, const auto& q) { return p[0] < q[0]; });
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const auto& p : points) {
        xs.push_back(p[0]);
        ys.push_back(p[1]);
    }
    validate_pl(xs, ys);
    const double t = std::floor(xs.front());
    if (t != 0.0) {
        for (auto& v : xs) v -= t;
        for (auto& v : ys) v -= t;
    }
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::PL;
    n->xs = std::move(xs);
    n->ys = std::move(ys);
    n->shift = shift;
    return Lift(n);
}

Lift Lift::mobius(const Mat2& m, long branch) {
    const double dt = m.det();
    if (!std::isfinite(dt) || dt <= 0)
        throw SingularMatrix("Mobius lift needs positive determinant");
    if (std::abs(dt - 1.0) > 1e-9)
        throw SingularMatrix("Mobius lift needs unit determinant (|det-1| <= 1e-9)");
    return Lift(make_mobius_node(m, branch));
}

Lift Lift::from_node(std::shared_ptr<const Node> n) { return Lift(std::move(n)); }

double Lift::operator()(double x) const { return eval_node(*node_, x); }

std::optional<double> Lift::translation_amount() const {
    double t;
    if (translation_node(*node_, &t)) return t;
    return std::nullopt;
}

Lift compose(const Lift& outer, const Lift& inner) {
    return Lift::from_node(compose_nodes(outer.share(), inner.share()));
}

Lift inverse(const Lift& f) {
    std::unordered_map<const Lift::Node*, NodePtr> memo;
    return Lift::from_node(invert_node(f.share(), memo));
}

Lift power(const Lift& f, long k) {
    if (k == 0) return Lift();
    if (k < 0) return power(inverse(f), -k);
    Lift acc;
    Lift sq = f;
    bool first = true;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) {
            acc = first ? sq : compose(acc, sq);
            first = false;
        }
        if (e > 1) sq = compose(sq, sq);
    }
    return acc;
}

Lift standard_lift(const Lift& f, double x0) {
    const double v = f(x0) - x0;
    const long k = -static_cast<long>(std::floor(v));
    if (k == 0) return f;
    return compose(Lift::translation(k), f);
}

CircleMap CircleMap::from_lift(const Lift& f) { return {standard_lift(f, 0.0), true}; }

std::pair<double, double> displacement_range(const Lift& f, int grid_size) {
    if (grid_size < 2) throw Error("displacement_range needs grid_size >= 2");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < grid_size; ++i) {
        const double x = static_cast<double>(i) / grid_size;
        const double d = f(x) - x;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

Enclosure translation_number(const Lift& f, double tol, const RotationOptions& opts) {
    if (!(tol > 0)) throw Error("translation_number needs tol > 0");
    if (auto t = f.translation_amount()) {
        const double eps = 1e-15 * (1.0 + std::abs(*t));
        return {*t - eps, *t + eps, 1};
    }

    const int m = std::max(2, opts.grid);
    const double h = 1.0 / m;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    Lift g = f;
    long n = 1;
    for (;;) {
        double dmin = std::numeric_limits<double>::infinity();
        double dmax = -dmin;
        for (int i = 0; i < m; ++i) {
            const double x = static_cast<double>(i) / m;
            const double d = g(x) - x;
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
        const double dn = static_cast<double>(n);
        const double K = std::ceil(dmin);
        // drifting (merged-matrix) trees must clear the integer by a margin;
        // directly evaluated trees certify exact touches too
        const double margin =
            g.node().approx ? 1e-8 + std::abs(K) * 1e-12 : 0.0;
        double cl, ch;
        if (dmin <= K - margin && dmax >= K + margin) {
            // Sampled displacements of g = f^n straddle the integer K by a
            // clear margin, so g displaces some point by exactly K and
            // rott(f) = K/n; the slack covers evaluation drift.
            const double s = 1e-12 + 1e-9 / dn;
            cl = K / dn - s;
            ch = K / dn + s;
        } else {
            const double slack = 1e-12 + dn * 1e-16 + 1e-9 / dn;
            cl = (dmin - h) / dn - slack;
            ch = (dmax + h) / dn + slack;
        }
        lo = std::max(lo, cl);
        hi = std::min(hi, ch);
        if (lo > hi) {
            lo = cl;
            hi = ch;
        }
        if (hi - lo <= tol) return {lo, hi, n};
        if (2 * n > opts.max_power)
            throw IterationLimit("translation_number: enclosure width " +
                                 std::to_string(hi - lo) + " above tolerance at power cap");
        g = compose(g, g);
        n *= 2;
    }
}

double rotation_number(const CircleMap& c, double tol, const RotationOptions& opts) {
    const Enclosure e = translation_number(c.lift, tol, opts);
    const double mid = e.mid();
    double r = mid - std::floor(mid);
    if (r >= 1.0) r = 0.0;
    return r;
}

} // namespace eulerlab
