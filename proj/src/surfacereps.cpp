#include "eulerlab/surfacereps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eulerlab {

SurfacePresentation::SurfacePresentation(int g, int n) : genus(g), punctures(n) {
    if (g < 0 || n < 0) throw Error("genus and punctures must be nonnegative");
    if (num_generators() == 0) throw Error("the sphere group has no generators");
}

Word SurfacePresentation::commutator_word(int i) const {
    return {a(i), b(i), -a(i), -b(i)};
}

Word SurfacePresentation::relator() const {
    Word w;
    for (int i = 1; i <= genus; ++i) {
        const Word c = commutator_word(i);
        w.insert(w.end(), c.begin(), c.end());
    }
    for (int j = 1; j <= punctures; ++j) w.push_back(c(j));
    return w;
}

std::string SurfacePresentation::generator_name(int idx) const {
    if (idx < 1 || idx > num_generators()) throw BadIndex("generator index out of range");
    if (idx <= 2 * genus) {
        const int i = (idx + 1) / 2;
        return (idx % 2 == 1 ? "a" : "b") + std::to_string(i);
    }
    return "c" + std::to_string(idx - 2 * genus);
}

int SurfacePresentation::generator_index(const std::string& name) const {
    if (name.size() < 2) return -1;
    const char kind = name[0];
    int i = 0;
    for (std::size_t p = 1; p < name.size(); ++p) {
        if (name[p] < '0' || name[p] > '9') return -1;
        i = i * 10 + (name[p] - '0');
    }
    if (i < 1) return -1;
    if (kind == 'a' && i <= genus) return a(i);
    if (kind == 'b' && i <= genus) return b(i);
    if (kind == 'c' && i <= punctures) return c(i);
    return -1;
}

namespace {

Lift compose_word(const std::vector<Lift>& gens, const Word& w) {
    Lift out;
    bool first = true;
    for (int l : w) {
        const int idx = std::abs(l);
        if (idx < 1 || idx > static_cast<int>(gens.size()))
            throw BadIndex("word letter outside the generator range");
        Lift g = l > 0 ? gens[idx - 1] : inverse(gens[idx - 1]);
        out = first ? g : compose(out, g);
        first = false;
    }
    return out;
}

} // namespace

LiftedRep::LiftedRep(SurfacePresentation pres, std::vector<Lift> free_generator_lifts)
    : pres_(pres) {
    const int nfree = pres_.num_free_generators();
    if (static_cast<int>(free_generator_lifts.size()) != nfree)
        throw Error("expected one lift per free generator (" + std::to_string(nfree) + ")");
    lifts_ = std::move(free_generator_lifts);
    if (pres_.punctures >= 1) {
        // c_n = (prefix)^{-1} where relator = prefix * c_n
        Word prefix = pres_.relator();
        prefix.pop_back();
        lifts_.push_back(prefix.empty() ? Lift() : inverse(compose_word(lifts_, prefix)));
    }
}

LiftedRep LiftedRep::from_mobius(SurfacePresentation pres,
                                 const std::vector<Mat2>& free_generator_matrices) {
    std::vector<Lift> lifts;
    lifts.reserve(free_generator_matrices.size());
    std::vector<Mat2> mats;
    for (const auto& m : free_generator_matrices) {
        const Mat2 u = normalize_det(m);
        mats.push_back(u);
        lifts.push_back(Lift::mobius(u, 0));
    }
    LiftedRep r(pres, std::move(lifts));
    if (r.pres_.punctures >= 1) {
        Word prefix = r.pres_.relator();
        prefix.pop_back();
        Mat2 p{};
        for (int l : prefix) {
            const Mat2 g = l > 0 ? mats[l - 1] : mats[-l - 1].inverse();
            p = p * g;
        }
        mats.push_back(normalize_det(p.inverse()));
    }
    r.matrices_ = std::move(mats);
    return r;
}

const Lift& LiftedRep::generator_lift(int idx) const {
    if (idx < 1 || idx > pres_.num_generators())
        throw BadIndex("generator index out of range");
    return lifts_[idx - 1];
}

Lift LiftedRep::lift_of_word(const Word& w) const { return compose_word(lifts_, w); }

Mat2 LiftedRep::generator_matrix(int idx) const {
    if (!has_matrices()) throw Error("representation is not Mobius-valued");
    if (idx < 1 || idx > pres_.num_generators())
        throw BadIndex("generator index out of range");
    return matrices_[idx - 1];
}

Mat2 LiftedRep::matrix_of_word(const Word& w) const {
    if (!has_matrices()) throw Error("representation is not Mobius-valued");
    Mat2 out{};
    for (int l : w) {
        const int idx = std::abs(l);
        if (idx < 1 || idx > static_cast<int>(matrices_.size()))
            throw BadIndex("word letter outside the generator range");
        const Mat2 g = l > 0 ? matrices_[idx - 1] : matrices_[idx - 1].inverse();
        out = out * g;
    }
    return out;
}

RelatorReport relator_translation(const LiftedRep& r, double tol, int grid) {
    if (r.presentation().punctures != 0)
        throw Error("relator_translation applies to closed presentations");
    if (!(tol > 0)) throw Error("relator_translation needs tol > 0");
    const Lift h = r.lift_of_word(r.presentation().relator());
    const int m = std::max(2, grid);
    const double d0 = h(0.0);
    const long e = std::lround(d0);
    double residual = std::abs(d0 - static_cast<double>(e));
    for (int i = 1; i <= m; ++i) {
        const double x = static_cast<double>(i) / m;
        residual = std::max(residual, std::abs(h(x) - x - static_cast<double>(e)));
    }
    if (residual > tol)
        throw NotARepresentation("lifted relator is not an integer translation "
                                 "(residual " + std::to_string(residual) + ")");
    return {e, residual};
}

EulerNumber euler_number_punctured(const LiftedRep& r, double tol,
                                   const RotationOptions& opts) {
    const auto& pres = r.presentation();
    if (pres.punctures < 1) throw Error("euler_number_punctured needs n >= 1");
    const double each = tol / pres.punctures;
    EulerNumber out{0.0, 0.0, {}};
    for (int j = 1; j <= pres.punctures; ++j) {
        const Enclosure enc =
            translation_number(r.generator_lift(pres.c(j)), each, opts);
        out.boundary_rot.push_back(enc);
        out.e -= enc.mid();
        out.err += enc.width();
    }
    return out;
}

MilnorWoodReport milnor_wood_check(const LiftedRep& r, double tol,
                                   const RotationOptions& opts) {
    const auto& pres = r.presentation();
    MilnorWoodReport rep{};
    rep.chi = pres.chi();
    if (pres.punctures == 0) {
        const RelatorReport rr = relator_translation(r, std::max(tol, 1e-9));
        rep.e = static_cast<double>(rr.e);
        rep.err = rr.residual;
    } else {
        const EulerNumber en = euler_number_punctured(r, std::max(tol, 1e-6), opts);
        rep.e = en.e;
        rep.err = en.err;
    }
    const double bound = std::abs(static_cast<double>(rep.chi));
    rep.ok = std::abs(rep.e) <= bound + rep.err + tol;
    rep.equality = std::abs(std::abs(rep.e) - bound) <= rep.err + tol;
    return rep;
}

std::vector<EllipticWitness> elliptic_survey(const LiftedRep& r, int L,
                                             double eps_tr, std::size_t budget) {
    if (!r.has_matrices()) throw Error("elliptic_survey needs a Mobius-valued representation");
    const int rank = r.presentation().num_free_generators();
    if (reduced_ball_size(rank, L) > budget)
        throw BallTooLarge("elliptic_survey ball exceeds budget");

    std::vector<Mat2> gens, inv_gens;
    for (int i = 1; i <= rank; ++i) {
        gens.push_back(r.generator_matrix(i));
        inv_gens.push_back(gens.back().inverse());
    }
    std::vector<EllipticWitness> out;
    // DFS over reduced words with an incremental matrix product
    struct Frame { Word w; Mat2 m; };
    std::vector<Frame> stack;
    stack.push_back({{}, Mat2{}});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (!f.w.empty()) {
            const MobiusClass cls = mobius_classify(f.m, eps_tr);
            if (cls.kind == MobiusKind::Elliptic) out.push_back({f.w, cls.trace});
        }
        if (static_cast<int>(f.w.size()) == L) continue;
        for (int g = 1; g <= rank; ++g) {
            for (int s : {g, -g}) {
                if (!f.w.empty() && f.w.back() == -s) continue;
                Frame nf;
                nf.w = f.w;
                nf.w.push_back(s);
                nf.m = f.m * (s > 0 ? gens[g - 1] : inv_gens[g - 1]);
                stack.push_back(std::move(nf));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EllipticWitness& x, const EllipticWitness& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return x.word < y.word;
    });
    return out;
}

MaximalityReport maximality_check(const LiftedRep& r, int L, double tol,
                                  const RotationOptions& opts) {
    MaximalityReport rep{};
    const auto& pres = r.presentation();
    rep.chi = pres.chi();
    if (pres.punctures == 0) {
        const RelatorReport rr = relator_translation(r, std::max(tol, 1e-9));
        rep.e = static_cast<double>(rr.e);
        rep.err = rr.residual;
    } else {
        const EulerNumber en = euler_number_punctured(r, std::max(tol, 1e-6), opts);
        rep.e = en.e;
        rep.err = en.err;
    }
    rep.maximal =
        std::abs(std::abs(rep.e) - std::abs(static_cast<double>(rep.chi))) <= rep.err + tol;
    rep.elliptic_witnesses = r.has_matrices() ? elliptic_survey(r, L) : std::vector<EllipticWitness>{};
    rep.consistent = !rep.maximal || rep.elliptic_witnesses.empty();
    return rep;
}

Fingerprint fingerprint(const LiftedRep& r, int L, double tol,
                        std::size_t pair_budget, const RotationOptions& opts) {
    const int rank = r.presentation().num_free_generators();
    const std::size_t b = reduced_ball_size(rank, L);
    if (b * b > pair_budget) throw BallTooLarge("fingerprint pair count exceeds budget");
    Fingerprint fp;
    fp.words = reduced_ball(rank, L);

    std::vector<Lift> lifts;
    std::vector<Enclosure> single;
    lifts.reserve(fp.words.size());
    const double each = tol / 3.0;
    for (const auto& w : fp.words) {
        lifts.push_back(r.lift_of_word(w));
        single.push_back(translation_number(lifts.back(), each, opts));
    }
    fp.tau.resize(fp.words.size());
    for (std::size_t i = 0; i < fp.words.size(); ++i) {
        fp.tau[i].resize(fp.words.size());
        for (std::size_t j = 0; j < fp.words.size(); ++j) {
            const Enclosure prod =
                translation_number(compose(lifts[i], lifts[j]), each, opts);
            fp.tau[i][j] = {prod.mid() - single[i].mid() - single[j].mid(),
                            prod.width() + single[i].width() + single[j].width()};
        }
    }
    for (int g = 1; g <= rank; ++g)
        fp.rot_generators.push_back(translation_number(r.generator_lift(g), each, opts));
    return fp;
}

namespace {
double dist_mod1(double x) {
    const double r = x - std::round(x);
    return std::abs(r);
}
} // namespace

bool fingerprints_agree(const Fingerprint& f1, const Fingerprint& f2, double slack) {
    if (f1.words.size() != f2.words.size() ||
        f1.rot_generators.size() != f2.rot_generators.size())
        return false;
    for (std::size_t i = 0; i < f1.words.size(); ++i)
        for (std::size_t j = 0; j < f1.words.size(); ++j) {
            const TauValue& a = f1.tau[i][j];
            const TauValue& b = f2.tau[i][j];
            if (std::abs(a.value - b.value) > a.err + b.err + slack) return false;
        }
    for (std::size_t g = 0; g < f1.rot_generators.size(); ++g) {
        const Enclosure& a = f1.rot_generators[g];
        const Enclosure& b = f2.rot_generators[g];
        if (dist_mod1(a.mid() - b.mid()) > a.width() + b.width() + slack) return false;
    }
    return true;
}

SemiConjugacyReport semi_conjugacy_map(const LiftedRep& r1, const LiftedRep& r2,
                                       int L, int grid, std::size_t budget) {
    if (!(r1.presentation() == r2.presentation()))
        throw Error("semi_conjugacy_map needs matching presentations");
    if (grid < 2) throw Error("semi_conjugacy_map needs grid >= 2");
    const int rank = r1.presentation().num_free_generators();
    if (reduced_ball_size(rank, L) > budget)
        throw BallTooLarge("semi_conjugacy_map ball exceeds budget");

    SemiConjugacyReport rep;
    rep.grid = grid;

    // Homomorphic lifts: standard lifts of the generators extended along
    // words. Re-standardizing each word separately is unstable where a
    // word's rotation number hits an integer, so the integer parts ride.
    std::vector<Lift> gens1, gens2;
    for (int g = 1; g <= rank; ++g) {
        gens1.push_back(standard_lift(r1.generator_lift(g)));
        gens2.push_back(standard_lift(r2.generator_lift(g)));
    }
    const auto free_lift = [](const std::vector<Lift>& gens, const Word& w) {
        Lift out;
        for (int l : w)
            out = compose(out, l > 0 ? gens[l - 1] : inverse(gens[-l - 1]));
        return out;
    };
    std::vector<Lift> terms;
    for (const auto& w : reduced_ball(rank, L))
        terms.push_back(compose(inverse(free_lift(gens1, w)), free_lift(gens2, w)));
    const auto phi = [&terms](double x) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& t : terms) best = std::max(best, t(x));
        return best;
    };

    rep.values.resize(grid + 1);
    for (int i = 0; i <= grid; ++i)
        rep.values[i] = phi(static_cast<double>(i) / grid);
    for (int i = 0; i < grid; ++i)
        if (rep.values[i + 1] < rep.values[i] - 1e-12) ++rep.monotonicity_violations;
    for (int i = 0; i < grid; ++i) {
        const double x = static_cast<double>(i) / grid;
        rep.periodicity_residual =
            std::max(rep.periodicity_residual, std::abs(phi(x + 1.0) - rep.values[i] - 1.0));
    }

    bool hazard = true;
    for (int g = 1; g <= rank && hazard; ++g) {
        const auto [lo, hi] = displacement_range(standard_lift(r1.generator_lift(g)), 64);
        hazard = lo <= 1e-12 && hi >= -1e-12;
    }
    rep.fixed_point_hazard = hazard;

    for (int g = 1; g <= rank; ++g) {
        const Lift s1 = standard_lift(r1.generator_lift(g));
        const Lift s2 = standard_lift(r2.generator_lift(g));
        const Enclosure rot1 = translation_number(s1, 1e-3);
        const Enclosure rot2 = translation_number(s2, 1e-3);
        if (dist_mod1(rot1.mid() - rot2.mid()) > rot1.width() + rot2.width() + 1e-9)
            rep.fingerprint_warning = true;
        for (int i = 0; i < grid; ++i) {
            const double x = static_cast<double>(i) / grid;
            const double d = s1(phi(x)) - phi(s2(x));
            rep.equivariance_residual = std::max(rep.equivariance_residual, dist_mod1(d));
        }
    }
    // tau must also agree on generator pairs for semi-conjugacy to be possible
    for (int g = 1; g <= rank && !rep.fingerprint_warning; ++g)
        for (int h = 1; h <= rank && !rep.fingerprint_warning; ++h) {
            const TauValue t1 = tau(gens1[g - 1], gens1[h - 1], 1e-3);
            const TauValue t2 = tau(gens2[g - 1], gens2[h - 1], 1e-3);
            if (std::abs(t1.value - t2.value) > t1.err + t2.err + 1e-9)
                rep.fingerprint_warning = true;
        }
    return rep;
}

AdditivityReport additivity_check(const LiftedRep& r, double tol,
                                  const RotationOptions& opts) {
    const auto& pres = r.presentation();
    if (pres.genus != 2 || pres.punctures != 0)
        throw Error("additivity_check applies to closed genus-2 representations");
    AdditivityReport rep{};
    rep.e = relator_translation(r, std::max(tol, 1e-9)).e;
    rep.e1 = translation_number(r.lift_of_word(pres.commutator_word(1)), tol / 4, opts);
    rep.e2 = translation_number(r.lift_of_word(pres.commutator_word(2)), tol / 4, opts);
    rep.ok = std::abs(static_cast<double>(rep.e) - (rep.e1.mid() + rep.e2.mid())) <=
             rep.e1.width() + rep.e2.width() + tol;
    return rep;
}

} // namespace eulerlab
