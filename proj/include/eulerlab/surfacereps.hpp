#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerlab/eulercocycle.hpp"
#include "eulerlab/lift.hpp"
#include "eulerlab/words.hpp"

namespace eulerlab {

// Gamma_{g,n} = < a_1, b_1, ..., a_g, b_g, c_1, ..., c_n |
//                 [a_1,b_1]...[a_g,b_g] c_1...c_n >.
// Generator indices: a_i = 2i-1, b_i = 2i, c_j = 2g+j.
// For n >= 1 the group is free on the first 2g+n-1 generators and c_n is
// carried by the relator.
struct SurfacePresentation {
    int genus = 0;
    int punctures = 0;

    SurfacePresentation(int g, int n);

    int chi() const { return 2 - 2 * genus - punctures; }
    int num_generators() const { return 2 * genus + punctures; }
    int num_free_generators() const {
        return punctures >= 1 ? num_generators() - 1 : num_generators();
    }
    int a(int i) const { return 2 * i - 1; }
    int b(int i) const { return 2 * i; }
    int c(int j) const { return 2 * genus + j; }

    Word relator() const;
    Word commutator_word(int i) const; // [a_i, b_i]
    std::string generator_name(int idx) const;
    // -1 when the name is not a generator of this presentation
    int generator_index(const std::string& name) const;

    bool operator==(const SurfacePresentation&) const = default;
};

// Lifts attached to the free generators; for n >= 1 the lift of c_n is
// derived from the relator, which pins the sum of integer lift ambiguities.
class LiftedRep {
public:
    LiftedRep(SurfacePresentation pres, std::vector<Lift> free_generator_lifts);

    // Mobius-valued representation; keeps the matrices for trace surveys.
    static LiftedRep from_mobius(SurfacePresentation pres,
                                 const std::vector<Mat2>& free_generator_matrices);

    const SurfacePresentation& presentation() const { return pres_; }
    const Lift& generator_lift(int idx) const; // 1..num_generators
    Lift lift_of_word(const Word& w) const;

    bool has_matrices() const { return !matrices_.empty(); }
    Mat2 generator_matrix(int idx) const;
    Mat2 matrix_of_word(const Word& w) const;

private:
    SurfacePresentation pres_;
    std::vector<Lift> lifts_;   // one per generator, c_n derived
    std::vector<Mat2> matrices_; // empty unless Mobius-valued
};

struct RelatorReport {
    long e;          // integer translation of the lifted relator
    double residual; // max grid deviation from e
};

// Closed case: the lifted relator must be an integer translation; its
// amount is the Euler number of the representation.
RelatorReport relator_translation(const LiftedRep& r, double tol = 1e-6,
                                  int grid = 64);

struct EulerNumber {
    double e;
    double err;
    std::vector<Enclosure> boundary_rot; // rott enclosure per boundary lift
};

// e = - sum_j rott(c_j lift); n >= 1.
EulerNumber euler_number_punctured(const LiftedRep& r, double tol,
                                   const RotationOptions& opts = {});

struct MilnorWoodReport {
    double e;
    double err;
    int chi;
    bool ok;       // |e| <= |chi| + err + tol
    bool equality; // ||e| - |chi|| <= err + tol
};

MilnorWoodReport milnor_wood_check(const LiftedRep& r, double tol = 1e-9,
                                   const RotationOptions& opts = {});

struct EllipticWitness {
    Word word;
    double trace;
};

// Non-identity elliptic images over the ball of reduced words of length <= L
// in the free generators; needs a Mobius-valued representation.
std::vector<EllipticWitness> elliptic_survey(const LiftedRep& r, int L,
                                             double eps_tr = 1e-9,
                                             std::size_t budget = 10000000);

struct MaximalityReport {
    double e;
    double err;
    int chi;
    bool maximal;
    std::vector<EllipticWitness> elliptic_witnesses;
    bool consistent; // maximal and no elliptic witness found at this L
};

MaximalityReport maximality_check(const LiftedRep& r, int L, double tol = 1e-6,
                                  const RotationOptions& opts = {});

struct Fingerprint {
    std::vector<Word> words;                  // ball of length <= L
    std::vector<std::vector<TauValue>> tau;   // tau[i][j] for (words[i], words[j])
    std::vector<Enclosure> rot_generators;    // rott enclosure per free generator
};

Fingerprint fingerprint(const LiftedRep& r, int L, double tol,
                        std::size_t pair_budget = 100000,
                        const RotationOptions& opts = {});

// Entrywise agreement within summed error bars plus slack.
bool fingerprints_agree(const Fingerprint& f1, const Fingerprint& f2,
                        double slack = 1e-9);

struct SemiConjugacyReport {
    int grid = 0;
    std::vector<double> values;     // phi at i/grid, i = 0..grid
    int monotonicity_violations = 0;
    double periodicity_residual = 0;  // max |phi(x+1) - phi(x) - 1|
    double equivariance_residual = 0; // distance to nearest integer
    bool fingerprint_warning = false;
    bool fixed_point_hazard = false;
};

// Truncated intertwining map phi(x) = max over words w of length <= L of
// (rho1(w)~)^{-1}((rho2(w)~)(x)) with standard lifts; monotone and
// commuting with unit translation by construction.
SemiConjugacyReport semi_conjugacy_map(const LiftedRep& r1, const LiftedRep& r2,
                                       int L, int grid,
                                       std::size_t budget = 10000000);

struct AdditivityReport {
    long e;
    Enclosure e1, e2; // rott of the two lifted commutators
    bool ok;
};

// Genus-2 closed: e equals the sum of the two one-holed-torus Euler numbers.
AdditivityReport additivity_check(const LiftedRep& r, double tol = 1e-6,
                                  const RotationOptions& opts = {});

} // namespace eulerlab
