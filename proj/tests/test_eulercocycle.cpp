#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "eulerlab/eulercocycle.hpp"
#include "randoms.hpp"

using namespace eulerlab;
using eltest::random_lift;

TEST_CASE("integral Euler cocycle: basics") {
    eltest::Rng rng(31);
    for (int i = 0; i < 20; ++i) {
        Lift f = random_lift(rng);
        CHECK(integral_euler_cocycle(Lift(), f) == 0);
        CHECK(integral_euler_cocycle(f, Lift()) == 0);
    }
    // rotations by 0.6: 0.6 + 0.6 wraps once
    CHECK(integral_euler_cocycle(Lift::rotation(0.6), Lift::rotation(0.6)) == 1);
    CHECK(integral_euler_cocycle(Lift::rotation(0.2), Lift::rotation(0.3)) == 0);
}

TEST_CASE("integral Euler cocycle: values in {0,1} and cocycle identity") {
    eltest::Rng rng(37);
    std::vector<Lift> maps;
    for (int i = 0; i < 30; ++i) maps.push_back(random_lift(rng));
    for (int i = 0; i < 200; ++i) {
        const Lift& f = maps[rng.uniform_int(0, maps.size() - 1)];
        const Lift& g = maps[rng.uniform_int(0, maps.size() - 1)];
        const int c = integral_euler_cocycle(f, g);
        CHECK((c == 0 || c == 1));
    }
    std::vector<std::array<Lift, 3>> triples;
    for (int i = 0; i < 100; ++i)
        triples.push_back({maps[rng.uniform_int(0, maps.size() - 1)],
                           maps[rng.uniform_int(0, maps.size() - 1)],
                           maps[rng.uniform_int(0, maps.size() - 1)]});
    const double res = cocycle_residual<Lift>(
        [](const Lift& f, const Lift& g) { return integral_euler_cocycle(f, g); },
        [](const Lift& f, const Lift& g) { return compose(f, g); },
        std::span<const std::array<Lift, 3>>(triples));
    CHECK(res == 0.0);
}

TEST_CASE("changing the basepoint changes c by the coboundary of q") {
    // q(f) = (f~_{x0})^{-1} f~_{x1} as an integer translation, |q| < 3
    const double x0 = 0.0, x1 = 0.37;
    eltest::Rng rng(41);
    const auto q = [&](const Lift& f) {
        const Lift a = standard_lift(f, x0);
        const Lift b = standard_lift(f, x1);
        const double v = compose(inverse(a), b)(0.25) - 0.25;
        const long k = std::lround(v);
        REQUIRE(std::abs(v - static_cast<double>(k)) < 1e-9);
        return k;
    };
    for (int i = 0; i < 200; ++i) {
        Lift f = random_lift(rng);
        Lift g = random_lift(rng);
        CHECK(std::abs(q(f)) < 3);
        const long delta_q = q(f) + q(g) - q(compose(f, g));
        CHECK(integral_euler_cocycle(f, g, x1) - integral_euler_cocycle(f, g, x0) ==
              delta_q);
    }
}

TEST_CASE("tau: rotations and homogeneity") {
    TauValue t = tau(Lift::rotation(0.3), Lift::rotation(0.51), 1e-9);
    CHECK(std::abs(t.value) <= t.err + 1e-15);

    eltest::Rng rng(43);
    for (int trial = 0; trial < 4; ++trial) {
        Lift f = random_lift(rng);
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 4; ++m) {
                const TauValue h = tau(power(f, n), power(f, m), 1e-3);
                CHECK(std::abs(h.value) <= h.err + 1e-12);
            }
    }
}

TEST_CASE("tau: independent of the chosen lifts") {
    eltest::Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Lift f = random_lift(rng);
        Lift g = random_lift(rng);
        const TauValue t1 = tau(f, g, 1e-4);
        const TauValue t2 = tau(compose(Lift::translation(3), f), g, 1e-4);
        const TauValue t3 = tau(f, compose(Lift::translation(-2), g), 1e-4);
        CHECK(std::abs(t1.value - t2.value) <= t1.err + t2.err + 1e-12);
        CHECK(std::abs(t1.value - t3.value) <= t1.err + t3.err + 1e-12);
    }
}

TEST_CASE("tau: bounded by 2 plus error") {
    eltest::Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const TauValue t = tau(random_lift(rng), random_lift(rng), 1e-3);
        CHECK(std::abs(t.value) <= 2.0 + t.err);
    }
}

TEST_CASE("tau: cocycle identity within errors") {
    eltest::Rng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        Lift f = random_lift(rng), g = random_lift(rng), h = random_lift(rng);
        const TauValue a = tau(g, h, 1e-3);
        const TauValue b = tau(compose(f, g), h, 1e-3);
        const TauValue c = tau(f, compose(g, h), 1e-3);
        const TauValue d = tau(f, g, 1e-3);
        CHECK(std::abs(a.value - b.value + c.value - d.value) <=
              a.err + b.err + c.err + d.err + 1e-12);
    }
}

TEST_CASE("floor_cocycle") {
    CHECK(floor_cocycle(0.5, 1, 1) == 1);
    CHECK(floor_cocycle_rational(1, 2, 1, 1) == 1);
    for (long n = -5; n <= 5; ++n)
        for (long m = -5; m <= 5; ++m) CHECK(floor_cocycle(3.0, n, m) == 0);

    // cocycle identity on a window, alpha = 2/7 in exact arithmetic
    for (long n = -20; n <= 20; ++n)
        for (long m = -20; m <= 20; ++m)
            for (long k = -20; k <= 20; k += 5) {
                const long lhs = floor_cocycle_rational(2, 7, m, k) -
                                 floor_cocycle_rational(2, 7, n + m, k) +
                                 floor_cocycle_rational(2, 7, n, m + k) -
                                 floor_cocycle_rational(2, 7, n, m);
                CHECK(lhs == 0);
            }
    // float and exact agree away from integer boundary hazards
    for (long n = -9; n <= 9; ++n)
        for (long m = -9; m <= 9; ++m)
            CHECK(floor_cocycle(2.0 / 7.0, n, m) == floor_cocycle_rational(2, 7, n, m));
    CHECK_THROWS_AS(floor_cocycle_rational(1, 0, 1, 1), Error);
}

