#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

// 2x2 real matrix acting on RP^1; unit determinant expected throughout.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
    Mat2 inverse() const { return {d, -b, -c, a}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Rescales to determinant 1. Throws SingularMatrix when det <= 0 or tiny.
Mat2 normalize_det(const Mat2& m);

enum class MobiusKind { Elliptic, Parabolic, Hyperbolic, Identity };

struct MobiusClass {
    MobiusKind kind;
    double trace; // of the det-1 normalization, sign included
};

// Trace trichotomy with a tolerance band eps_tr around |tr| = 2.
MobiusClass mobius_classify(const Mat2& m, double eps_tr = 1e-9);

// An element of the group of increasing homeomorphisms of R commuting with
// x -> x+1, i.e. a lift of an orientation-preserving circle homeomorphism.
// Immutable expression tree; primitives are rotations, periodic piecewise
// linear maps and Mobius boundary maps. Compositions of rotation/translation
// nodes and of Mobius nodes collapse algebraically at construction.
class Lift {
public:
    struct Node;

    Lift(); // identity

    static Lift rotation(double alpha);
    static Lift translation(long k);
    // points: (x, f(x)) breakpoints, strictly increasing in both coordinates,
    // spanning less than one period; extended by f(x+1) = f(x)+1.
    static Lift piecewise_linear(std::vector<std::array<double, 2>> points,
                                 long shift = 0);
    // Boundary action on RP^1 parameterized by x -> line of angle pi*x.
    // Requires |det - 1| <= 1e-9.
    static Lift mobius(const Mat2& m, long branch = 0);

    double operator()(double x) const;

    // If the tree is a pure translation x -> x + t, returns t.
    std::optional<double> translation_amount() const;

    const Node& node() const { return *node_; }
    std::shared_ptr<const Node> share() const { return node_; }
    static Lift from_node(std::shared_ptr<const Node> n);

private:
    explicit Lift(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// outer after inner: (f o g)(x) = f(g(x)).
Lift compose(const Lift& outer, const Lift& inner);
Lift inverse(const Lift& f);
Lift power(const Lift& f, long k);

struct Lift::Node {
    enum class Kind { Rotation, Translate, PL, Mobius, Compose };
    Kind kind;

    double alpha = 0;                    // Rotation
    long k = 0;                          // Translate
    std::vector<double> xs, ys;          // PL breakpoints
    long shift = 0;                      // PL integer offset
    Mat2 m;                              // Mobius
    long branch = 0;                     // Mobius additive integer
    std::shared_ptr<const Node> lhs, rhs; // Compose: lhs o rhs
    // true when the subtree holds float-merged matrix products, whose
    // evaluations may drift beyond plain rounding
    bool approx = false;
};

// Certified enclosure of the translation number rott(f) = lim f^n(0)/n.
struct Enclosure {
    double lo = 0;
    double hi = 0;
    long iterations = 0; // power of f reached when the bound closed

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

struct RotationOptions {
    int grid = 16;            // displacement samples per period
    long max_power = 1 << 24; // IterationLimit beyond this
};

// Encloses rott(f) within tol using displacement bounds of f^n with n
// doubling. Sampled displacements straddling an integer K certify
// rott(f^n) = K exactly and terminate early. Enclosures computed at finer
// tolerances are nested (running intersection over a deterministic
// iteration prefix).
Enclosure translation_number(const Lift& f, double tol,
                             const RotationOptions& opts = {});

// f viewed as a circle homeomorphism together with its canonical lift,
// the one with lift(0) in [0,1).
struct CircleMap {
    Lift lift;
    bool normalized = false;

    static CircleMap from_lift(const Lift& f);
};

// Unique integer translate g = translate(k) o f with g(x0) - x0 in [0,1).
Lift standard_lift(const Lift& f, double x0 = 0.0);

// rott mod 1, in [0,1).
double rotation_number(const CircleMap& c, double tol,
                       const RotationOptions& opts = {});

// (min, max) of f(x) - x over a uniform grid on [0,1); max - min < 1.
std::pair<double, double> displacement_range(const Lift& f, int grid_size);

} // namespace eulerlab
