#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eulerlab/lift.hpp"
#include "randoms.hpp"

using namespace eulerlab;
using eltest::random_lift;
using eltest::random_mobius_lift;
using eltest::random_pl;
using eltest::rotation_matrix;

TEST_CASE("evaluate: primitives") {
    CHECK(Lift::rotation(0.25)(0.5) == doctest::Approx(0.75).epsilon(1e-14));

    Lift pl = Lift::piecewise_linear({{0.0, 0.0}, {0.5, 0.25}});
    CHECK(pl(0.25) == doctest::Approx(0.125).epsilon(1e-14));
    // wrap segment from (0.5, 0.25) to (1, 1)
    CHECK(pl(0.75) == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(pl(1.25) == doctest::Approx(1.125).epsilon(1e-14));

    Lift id = Lift::mobius(Mat2{}, 0);
    for (double x : {-1.7, 0.0, 0.3, 0.5, 0.99, 2.25})
        CHECK(id(x) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("evaluate: errors") {
    CHECK_THROWS_AS(Lift::piecewise_linear({{0.0, 0.0}, {0.5, 0.0}}), NonMonotonePL);
    CHECK_THROWS_AS(Lift::piecewise_linear({{0.0, 0.0}, {0.0, 0.5}}), NonMonotonePL);
    CHECK_THROWS_AS(Lift::piecewise_linear({{0.0, 0.0}, {0.5, 1.2}}), NonMonotonePL);
    CHECK_THROWS_AS(Lift::mobius(Mat2{2, 0, 0, 1}, 0), SingularMatrix);
    CHECK_THROWS_AS(Lift::mobius(Mat2{1, 1, 1, 1}, 0), SingularMatrix);
}

TEST_CASE("lift_algebra: compose, inverse, power") {
    Lift r = compose(Lift::rotation(0.3), Lift::rotation(0.4));
    CHECK(r.translation_amount().has_value());
    CHECK(*r.translation_amount() == doctest::Approx(0.7).epsilon(1e-15));

    Lift ri = inverse(Lift::rotation(0.3));
    CHECK(*ri.translation_amount() == doctest::Approx(-0.3).epsilon(1e-15));

    eltest::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Lift f = random_lift(rng);
        Lift g = random_lift(rng);
        Lift fg = compose(f, g);
        Lift fi = inverse(f);
        Lift p0 = power(f, 0);
        Lift p3 = power(f, 3);
        for (int i = 0; i < 16; ++i) {
            const double x = rng.uniform(-2, 2);
            CHECK(fg(x) == doctest::Approx(f(g(x))).epsilon(1e-10));
            CHECK(fi(f(x)) == doctest::Approx(x).epsilon(1e-9));
            CHECK(p0(x) == doctest::Approx(x).epsilon(1e-12));
            CHECK(p3(x) == doctest::Approx(f(f(f(x)))).epsilon(1e-9));
        }
    }
}

TEST_CASE("standard_lift") {
    Lift f = standard_lift(Lift::rotation(1.3));
    CHECK(f(0.0) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(standard_lift(Lift())(0.0) == 0.0);
    Lift g = standard_lift(Lift::rotation(-0.25));
    CHECK(g(0.0) == doctest::Approx(0.75).epsilon(1e-14));

    eltest::Rng rng(11);
    for (int i = 0; i < 30; ++i) {
        const double x0 = rng.uniform(-2, 2);
        Lift h = standard_lift(random_lift(rng), x0);
        const double d = h(x0) - x0;
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
    }
}

TEST_CASE("translation_number: rotations and fixed points") {
    Enclosure e = translation_number(Lift::rotation(0.3), 1e-9);
    CHECK(e.contains(0.3));
    CHECK(e.width() <= 1e-9);

    // PL map fixing 0 has rotation number 0
    Lift pl = Lift::piecewise_linear({{0.0, 0.0}, {0.3, 0.5}, {0.8, 0.9}});
    Enclosure ez = translation_number(pl, 1e-9);
    CHECK(ez.contains(0.0));
    CHECK(rotation_number(CircleMap::from_lift(pl), 1e-9) == doctest::Approx(0.0));
}

TEST_CASE("translation_number: elliptic Mobius quarter turn") {
    // independent oracle: the projective angle convention gives theta/pi
    Lift f = Lift::mobius(rotation_matrix(3.14159265358979323846 / 4), 0);
    Enclosure e = translation_number(f, 1e-10);
    CHECK(e.contains(0.25));
    CHECK(e.width() <= 1e-10);
}

TEST_CASE("translation_number: rejects bad tolerance, hits iteration cap") {
    CHECK_THROWS_AS(translation_number(Lift::rotation(0.1), 0.0), Error);
    RotationOptions opts;
    opts.max_power = 4;
    // irrational-like PL composite cannot certify 1e-12 by power 4
    eltest::Rng rng(3);
    Lift f = compose(random_pl(rng), Lift::rotation(0.38196601125));
    CHECK_THROWS_AS(translation_number(f, 1e-12, opts), IterationLimit);
}

TEST_CASE("rotation_number examples") {
    CHECK(rotation_number(CircleMap::from_lift(Lift::rotation(0.7)), 1e-9) ==
          doctest::Approx(0.7).epsilon(1e-9));
    Lift f = Lift::rotation(0.3);
    CHECK(rotation_number(CircleMap::from_lift(power(f, 3)), 1e-9) ==
          doctest::Approx(0.9).epsilon(1e-9));
}

TEST_CASE("displacement_range") {
    auto [lo, hi] = displacement_range(Lift::rotation(0.3), 16);
    CHECK(lo == doctest::Approx(0.3));
    CHECK(hi == doctest::Approx(0.3));
    CHECK_THROWS_AS(displacement_range(Lift::rotation(0.3), 1), Error);

    eltest::Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        Lift f = random_lift(rng);
        auto [dlo, dhi] = displacement_range(f, 64);
        CHECK(dhi - dlo < 1.0);
    }
    Lift fix0 = Lift::piecewise_linear({{0.0, 0.0}, {0.5, 0.6}});
    auto [flo, fhi] = displacement_range(fix0, 32);
    CHECK(flo <= 0.0);
    CHECK(fhi >= 0.0);
}

TEST_CASE("mobius_classify") {
    CHECK(mobius_classify(Mat2{2, 0, 0, 0.5}).kind == MobiusKind::Hyperbolic);
    CHECK(mobius_classify(rotation_matrix(3.14159265358979323846 / 3)).kind ==
          MobiusKind::Elliptic);
    CHECK(mobius_classify(Mat2{1, 1, 0, 1}).kind == MobiusKind::Parabolic);
    CHECK(mobius_classify(Mat2{1, 0, 0, 1}).kind == MobiusKind::Identity);
    CHECK(mobius_classify(Mat2{-1, 0, 0, -1}).kind == MobiusKind::Identity);
    CHECK(mobius_classify(Mat2{3, 0, 0, 3}).kind == MobiusKind::Identity); // normalized
    CHECK_THROWS_AS(mobius_classify(Mat2{1, 2, 1, 2}), SingularMatrix);
    CHECK_THROWS_AS(mobius_classify(Mat2{-1, 0, 0, 1}), SingularMatrix);
}

TEST_CASE("property: equivariance and monotonicity") {
    eltest::Rng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        Lift f = random_lift(rng, 2);
        double prev = f(-1.5);
        for (int i = 1; i <= 48; ++i) {
            const double x = -1.5 + 3.0 * i / 48;
            const double y = f(x);
            CHECK(y > prev);
            prev = y;
        }
        for (int i = 0; i < 8; ++i) {
            const double x = rng.uniform(-3, 3);
            CHECK(std::abs(f(x + 1.0) - f(x) - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("property: enclosure soundness and nesting") {
    eltest::Rng rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        Lift f = random_lift(rng, 2);
        Enclosure wide = translation_number(f, 1e-2);
        Enclosure tight = translation_number(f, 1e-3);
        CHECK(tight.lo >= wide.lo - 1e-15);
        CHECK(tight.hi <= wide.hi + 1e-15);
    }
    for (int trial = 0; trial < 25; ++trial) {
        const double alpha = rng.uniform01();
        CHECK(translation_number(Lift::rotation(alpha), 1e-9).contains(alpha));
    }
}

TEST_CASE("property: homogeneity of rott") {
    eltest::Rng rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        Lift f = trial % 2 == 0 ? random_pl(rng) : random_mobius_lift(rng);
        Enclosure e1 = translation_number(f, 1e-4);
        for (int k = 2; k <= 8; ++k) {
            Enclosure ek = translation_number(power(f, k), 1e-4);
            CHECK(std::abs(ek.mid() - k * e1.mid()) <= ek.width() + k * e1.width() + 1e-12);
        }
    }
}

TEST_CASE("property: fixed-point criterion") {
    eltest::Rng rng(404);
    RotationOptions opts;
    opts.grid = 256;
    for (int trial = 0; trial < 20; ++trial) {
        // build a lift with a known fixed point at x*, displaced by integer a
        const double xstar = rng.uniform01();
        Lift f = random_lift(rng);
        const double shift = xstar - f(xstar);
        Lift g = compose(Lift::rotation(shift + 3.0), f); // g(x*) = x* + 3
        auto [lo, hi] = displacement_range(g, 256);
        CHECK(lo <= 3.0 + 1e-12);
        CHECK(hi >= 3.0 - 1e-12);
        Enclosure e = translation_number(compose(Lift::translation(-3), g), 1e-5, opts);
        CHECK(e.contains(0.0));
    }
}

TEST_CASE("property: enclosures agree with brute-force orbit averages") {
    eltest::Rng rng(505);
    const long N = 200000;
    for (int trial = 0; trial < 10; ++trial) {
        Lift f = random_lift(rng, 2);
        const Enclosure e = translation_number(f, 1e-4);
        double x = 0.0;
        for (long i = 0; i < N; ++i) x = f(x);
        const double brute = x / N; // within 1/N of rott(f)
        CHECK(brute >= e.lo - 1.0 / N - 1e-9);
        CHECK(brute <= e.hi + 1.0 / N + 1e-9);
    }
}

TEST_CASE("property: continuity probe for PL perturbations") {
    // perturbing the values of a fixed PL family moves the midpoint by o(1)
    Lift base = Lift::piecewise_linear({{0.0, 0.05}, {0.4, 0.5}, {0.7, 0.72}});
    const double mid0 = translation_number(base, 1e-6).mid();
    double prev_dev = 1.0;
    for (double delta : {1e-2, 1e-4, 1e-6}) {
        Lift pert = Lift::piecewise_linear(
            {{0.0, 0.05 + delta}, {0.4, 0.5 - delta}, {0.7, 0.72 + delta}});
        const double dev = std::abs(translation_number(pert, 1e-6).mid() - mid0);
        CHECK(dev <= prev_dev + 1e-5);
        prev_dev = dev;
    }
    CHECK(prev_dev <= 1e-4);
}
