#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eulerlab/fixtures.hpp"
#include "eulerlab/surfacereps.hpp"
#include "randoms.hpp"

using namespace eulerlab;
using eltest::random_mobius;
using eltest::rotation_matrix;

namespace {

LiftedRep trivial_rep(int g, int n) {
    SurfacePresentation pres(g, n);
    return LiftedRep(pres, std::vector<Lift>(pres.num_free_generators()));
}

} // namespace

TEST_CASE("presentation bookkeeping") {
    SurfacePresentation p(2, 1);
    CHECK(p.chi() == -3);
    CHECK(p.num_generators() == 5);
    CHECK(p.num_free_generators() == 4);
    CHECK(p.generator_name(1) == "a1");
    CHECK(p.generator_name(4) == "b2");
    CHECK(p.generator_name(5) == "c1");
    CHECK(p.generator_index("b2") == 4);
    CHECK(p.generator_index("c2") == -1);
    CHECK(p.relator() == Word{1, 2, -1, -2, 3, 4, -3, -4, 5});
}

TEST_CASE("relator_translation") {
    CHECK(relator_translation(trivial_rep(2, 0)).e == 0);
    CHECK(relator_translation(trivial_rep(2, 0)).residual == 0.0);

    const RelatorReport octagon = relator_translation(fixtures::geometric_genus2_rep());
    CHECK(octagon.e == -2);
    CHECK(octagon.residual < 1e-6);

    // a random assignment does not satisfy the relator
    eltest::Rng rng(71);
    LiftedRep bad(SurfacePresentation(2, 0),
                  {Lift::mobius(random_mobius(rng), 0), Lift::mobius(random_mobius(rng), 0),
                   Lift::mobius(random_mobius(rng), 0), Lift::mobius(random_mobius(rng), 0)});
    CHECK_THROWS_AS(relator_translation(bad), NotARepresentation);
}

TEST_CASE("euler_number_punctured") {
    const EulerNumber triv = euler_number_punctured(trivial_rep(1, 1), 1e-9);
    CHECK(triv.e == doctest::Approx(0.0));

    // rotations commute, so the derived boundary lift is the identity
    LiftedRep rots(SurfacePresentation(1, 1),
                   {Lift::rotation(0.31), Lift::rotation(0.77)});
    const EulerNumber er = euler_number_punctured(rots, 1e-9);
    CHECK(std::abs(er.e) <= er.err + 1e-12);

    CHECK_THROWS_AS(euler_number_punctured(trivial_rep(2, 0), 1e-6), Error);
}

TEST_CASE("Sanov marking has Euler number 0") {
    // tr[a,b] = 18 > 2: the pair is not a geometric punctured-torus pair, and
    // the certified oracle pins rott of the commutator lift to 0
    const EulerNumber e = euler_number_punctured(fixtures::sanov_rep(), 1e-9);
    CHECK(std::abs(e.e) <= e.err);
    CHECK(e.err < 1e-9);
    const Mat2 h = fixtures::sanov_rep().matrix_of_word({1, 2, -1, -2});
    CHECK(h.trace() == doctest::Approx(18.0));
}

TEST_CASE("square torus pair attains the Milnor-Wood bound") {
    const MilnorWoodReport mw = milnor_wood_check(fixtures::square_torus_rep(), 1e-6);
    CHECK(mw.chi == -1);
    CHECK(mw.ok);
    CHECK(mw.equality);
    CHECK(std::abs(std::abs(mw.e) - 1.0) <= mw.err + 1e-9);
}

TEST_CASE("milnor_wood_check") {
    const MilnorWoodReport triv = milnor_wood_check(trivial_rep(1, 1));
    CHECK(triv.ok);
    CHECK(triv.e == doctest::Approx(0.0));

    eltest::Rng rng(73);
    for (int i = 0; i < 25; ++i) {
        LiftedRep r = LiftedRep::from_mobius(SurfacePresentation(1, 1),
                                             {random_mobius(rng), random_mobius(rng)});
        CHECK(milnor_wood_check(r, 1e-6).ok);
    }
}

TEST_CASE("elliptic generators keep the punctured torus below the bound") {
    eltest::Rng rng(79);
    for (int i = 0; i < 10; ++i) {
        const double theta = 0.1 + 0.8 * rng.uniform01();
        LiftedRep r = LiftedRep::from_mobius(
            SurfacePresentation(1, 1),
            {eltest::random_elliptic(rng, theta), random_mobius(rng)});
        const EulerNumber e = euler_number_punctured(r, 1e-5);
        CHECK(std::abs(e.e) < 1.0 - e.err);
    }
}

TEST_CASE("elliptic_survey") {
    // an SO(2)-valued representation: every nontrivial word is elliptic or identity
    LiftedRep rots = LiftedRep::from_mobius(
        SurfacePresentation(1, 1),
        {rotation_matrix(3.14159265358979323846 / 3), rotation_matrix(0.9)});
    const auto witnesses = elliptic_survey(rots, 3);
    const auto ball = reduced_ball(2, 3);
    for (const auto& w : ball) {
        if (w.empty()) continue;
        const MobiusClass cls = mobius_classify(rots.matrix_of_word(w));
        CHECK((cls.kind == MobiusKind::Elliptic || cls.kind == MobiusKind::Identity));
    }
    // rotation by pi/3 has trace 2 cos(pi/3) = 1
    bool found_a = false;
    for (const auto& w : witnesses)
        if (w.word == Word{1}) {
            found_a = true;
            CHECK(w.trace == doctest::Approx(1.0));
        }
    CHECK(found_a);

    // the geometric fixture is torsion-free: no elliptics in the ball
    CHECK(elliptic_survey(fixtures::geometric_genus2_rep(), 5).empty());
    CHECK(elliptic_survey(fixtures::sanov_rep(), 6).empty());

    CHECK_THROWS_AS(elliptic_survey(trivial_rep(1, 1), 3), Error);
    CHECK_THROWS_AS(elliptic_survey(fixtures::sanov_rep(), 8, 1e-9, 1000), BallTooLarge);
}

TEST_CASE("maximality_check") {
    const MaximalityReport octagon = maximality_check(fixtures::geometric_genus2_rep(), 5);
    CHECK(octagon.maximal);
    CHECK(octagon.elliptic_witnesses.empty());
    CHECK(octagon.consistent);

    const MaximalityReport triv = maximality_check(trivial_rep(2, 0), 2);
    CHECK_FALSE(triv.maximal);
}

TEST_CASE("additivity_check") {
    const AdditivityReport triv = additivity_check(trivial_rep(2, 0));
    CHECK(triv.ok);
    CHECK(triv.e == 0);

    const AdditivityReport oct = additivity_check(fixtures::geometric_genus2_rep());
    CHECK(oct.ok);
    CHECK(oct.e == -2);
    CHECK(oct.e1.contains(-1.0));
    CHECK(oct.e2.contains(-1.0));

    const AdditivityReport mixed = additivity_check(fixtures::glued_mixed_genus2_rep());
    CHECK(mixed.ok);
    CHECK(mixed.e == -2);
    CHECK(mixed.e1.contains(-1.0));
    CHECK(mixed.e2.contains(-1.0));

    // the glued Sanov double satisfies additivity as 0 = 0 + 0
    const AdditivityReport sanov = additivity_check(fixtures::glued_sanov_genus2_rep());
    CHECK(sanov.ok);
    CHECK(sanov.e == 0);

    CHECK_THROWS_AS(additivity_check(trivial_rep(1, 1)), Error);
}

TEST_CASE("euler number is invariant under integer translates of a generator") {
    eltest::Rng rng(83);
    for (int i = 0; i < 8; ++i) {
        std::vector<Lift> lifts{Lift::mobius(random_mobius(rng), 0),
                                Lift::mobius(random_mobius(rng), 0)};
        LiftedRep r1(SurfacePresentation(1, 1), lifts);
        lifts[0] = compose(Lift::translation(2), lifts[0]);
        LiftedRep r2(SurfacePresentation(1, 1), lifts);
        const EulerNumber e1 = euler_number_punctured(r1, 1e-5);
        const EulerNumber e2 = euler_number_punctured(r2, 1e-5);
        CHECK(std::abs(e1.e - e2.e) <= e1.err + e2.err + 1e-12);
    }
}

TEST_CASE("relator translation is conjugation invariant") {
    eltest::Rng rng(89);
    const LiftedRep base = fixtures::geometric_genus2_rep();
    for (int i = 0; i < 5; ++i) {
        const Mat2 c = random_mobius(rng);
        std::vector<Mat2> conj;
        for (int g = 1; g <= 4; ++g)
            conj.push_back(normalize_det(c * base.generator_matrix(g) * c.inverse()));
        LiftedRep r = LiftedRep::from_mobius(SurfacePresentation(2, 0), conj);
        CHECK(relator_translation(r).e == -2);
    }
}

TEST_CASE("fingerprint") {
    const Fingerprint triv = fingerprint(trivial_rep(1, 1), 1, 1e-6);
    for (const auto& row : triv.tau)
        for (const auto& t : row) CHECK(std::abs(t.value) <= t.err + 1e-12);
    for (const auto& e : triv.rot_generators) CHECK(std::abs(e.mid()) <= e.width() + 1e-12);

    // a rotation representation and its conjugate by a fixed PL homeomorphism
    LiftedRep rot_rep(SurfacePresentation(1, 1),
                      {Lift::rotation(0.21), Lift::rotation(0.58)});
    const Lift h = Lift::piecewise_linear({{0.0, 0.0}, {0.3, 0.55}, {0.8, 0.9}});
    const Lift hi = inverse(h);
    LiftedRep conj_rep(SurfacePresentation(1, 1),
                       {compose(h, compose(Lift::rotation(0.21), hi)),
                        compose(h, compose(Lift::rotation(0.58), hi))});
    const Fingerprint f1 = fingerprint(rot_rep, 2, 1e-4);
    const Fingerprint f2 = fingerprint(conj_rep, 2, 1e-4);
    CHECK(fingerprints_agree(f1, f2));

    // different rotation numbers on a generator are detected
    LiftedRep other(SurfacePresentation(1, 1),
                    {Lift::rotation(0.44), Lift::rotation(0.58)});
    CHECK_FALSE(fingerprints_agree(f1, fingerprint(other, 2, 1e-4)));

    CHECK_THROWS_AS(fingerprint(trivial_rep(1, 1), 4, 1e-3, 100), BallTooLarge);
}

TEST_CASE("semi_conjugacy_map") {
    // identical representations: the truncated map is the identity
    LiftedRep rot_rep(SurfacePresentation(1, 1),
                      {Lift::rotation(0.21), Lift::rotation(0.58)});
    const SemiConjugacyReport self = semi_conjugacy_map(rot_rep, rot_rep, 2, 32);
    CHECK(self.monotonicity_violations == 0);
    CHECK(self.periodicity_residual <= 1e-9);
    CHECK(self.equivariance_residual <= 1e-9);
    for (int i = 0; i <= 32; ++i)
        CHECK(self.values[i] == doctest::Approx(i / 32.0).epsilon(1e-9));

    // rotation representation vs its PL conjugate: residual decreases with L
    const Lift h = Lift::piecewise_linear({{0.0, 0.0}, {0.35, 0.6}, {0.8, 0.85}});
    const Lift hi = inverse(h);
    LiftedRep conj_rep(SurfacePresentation(1, 1),
                       {compose(h, compose(Lift::rotation(0.21), hi)),
                        compose(h, compose(Lift::rotation(0.58), hi))});
    double prev = 1e9;
    for (int L = 1; L <= 4; ++L) {
        const SemiConjugacyReport rep = semi_conjugacy_map(conj_rep, rot_rep, L, 24);
        CHECK(rep.monotonicity_violations == 0);
        CHECK(rep.periodicity_residual <= 1e-9);
        CHECK_FALSE(rep.fingerprint_warning);
        CHECK(rep.equivariance_residual <= prev + 1e-9);
        prev = rep.equivariance_residual;
    }

    // mismatched fingerprints are reported, the map is still produced
    LiftedRep other(SurfacePresentation(1, 1),
                    {Lift::rotation(0.44), Lift::rotation(0.58)});
    const SemiConjugacyReport warned = semi_conjugacy_map(other, rot_rep, 2, 16);
    CHECK(warned.fingerprint_warning);
    CHECK(static_cast<int>(warned.values.size()) == 17);

    // trivial representation: every generator straddles zero displacement
    const SemiConjugacyReport hazard =
        semi_conjugacy_map(trivial_rep(1, 1), trivial_rep(1, 1), 1, 8);
    CHECK(hazard.fixed_point_hazard);
}
