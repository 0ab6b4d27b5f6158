#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eulerlab/eulercocycle.hpp"
#include "eulerlab/extensions.hpp"
#include "eulerlab/fixtures.hpp"
#include "eulerlab/io.hpp"
#include "eulerlab/ivanovturaev.hpp"
#include "eulerlab/quasimorphism.hpp"
#include "eulerlab/simplicialvolume.hpp"
#include "eulerlab/surfacereps.hpp"

namespace el = eulerlab;
using el::json;

namespace {

// inline shorthands or a path to a lift JSON file
el::Lift parse_lift_arg(const std::string& arg) {
    const auto colon = arg.find(':');
    if (colon != std::string::npos) {
        const std::string kind = arg.substr(0, colon);
        const std::string rest = arg.substr(colon + 1);
        if (kind == "rotation") return el::Lift::rotation(std::stod(rest));
        if (kind == "translate") return el::Lift::translation(std::stol(rest));
        if (kind == "mobius") {
            double v[4];
            long branch = 0;
            std::size_t pos = 0;
            std::string r = rest;
            for (int i = 0; i < 4; ++i) {
                v[i] = std::stod(r, &pos);
                r = r.substr(pos);
                if (!r.empty() && (r[0] == ',' || r[0] == ':')) r = r.substr(1);
            }
            if (!r.empty()) branch = std::stol(r);
            return el::Lift::mobius(el::normalize_det({v[0], v[1], v[2], v[3]}), branch);
        }
        throw el::SchemaError("unknown lift shorthand \"" + kind + "\"");
    }
    return el::lift_from_json(el::load_json_file(arg));
}

el::LiftedRep load_rep(const std::string& path) {
    if (path == "fixture:sanov") return el::fixtures::sanov_rep();
    if (path == "fixture:genus2") return el::fixtures::geometric_genus2_rep();
    if (path == "fixture:glued") return el::fixtures::glued_mixed_genus2_rep();
    return el::rep_from_json(el::load_json_file(path));
}

json enclosure_json(const el::Enclosure& e) {
    return {{"lo", e.lo}, {"hi", e.hi}, {"iterations", e.iterations}};
}

void emit(const json& j, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(output);
        if (!out) throw el::Error("cannot write " + output);
        out << j.dump() << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified invariants of circle actions and flat bundles"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "write the JSON result to a file instead of stdout");

    // rot
    auto* rot = app.add_subcommand("rot", "translation/rotation number enclosure of a lift")->fallthrough();
    std::string rot_lift;
    double rot_tol = 1e-9;
    rot->add_option("--lift", rot_lift, "lift (rotation:a | translate:k | mobius:a,b,c,d | file)")->required();
    rot->add_option("--tol", rot_tol, "enclosure width target");

    // tau
    auto* tauc = app.add_subcommand("tau", "canonical real Euler cocycle on word pairs")->fallthrough();
    std::string tau_rep, tau_pairs;
    double tau_tol = 1e-6;
    tauc->add_option("--rep", tau_rep, "representation file")->required();
    tauc->add_option("--pairs", tau_pairs, "JSON array of [word, word] pairs")->required();
    tauc->add_option("--tol", tau_tol, "error budget per pair");

    // euler
    auto* euler = app.add_subcommand("euler", "Euler number of a surface-group representation")->fallthrough();
    std::string euler_rep;
    double euler_tol = 1e-6;
    euler->add_option("--rep", euler_rep)->required();
    euler->add_option("--tol", euler_tol);

    // mw
    auto* mw = app.add_subcommand("mw", "Milnor-Wood check")->fallthrough();
    std::string mw_rep;
    double mw_tol = 1e-6;
    mw->add_option("--rep", mw_rep)->required();
    mw->add_option("--tol", mw_tol);

    // survey
    auto* survey = app.add_subcommand("survey", "elliptic elements over a word ball")->fallthrough();
    std::string survey_rep;
    int survey_ball = 4;
    survey->add_option("--rep", survey_rep)->required();
    survey->add_option("--ball", survey_ball, "max word length (<= 8)");

    // fingerprint
    auto* fp = app.add_subcommand("fingerprint", "tau table and generator rotation numbers")->fallthrough();
    std::string fp_rep;
    int fp_ball = 2;
    double fp_tol = 1e-4;
    fp->add_option("--rep", fp_rep)->required();
    fp->add_option("--ball", fp_ball, "max word length (<= 4)");
    fp->add_option("--tol", fp_tol);

    // semiconj
    auto* sc = app.add_subcommand("semiconj", "truncated semi-conjugating map between two representations")->fallthrough();
    std::string sc_rep1, sc_rep2;
    int sc_ball = 3, sc_grid = 64;
    sc->add_option("--rep", sc_rep1)->required();
    sc->add_option("--rep2", sc_rep2)->required();
    sc->add_option("--ball", sc_ball, "max word length (<= 5)");
    sc->add_option("--grid", sc_grid);

    // qm
    auto* qm = app.add_subcommand("qm", "Rolli quasimorphisms on the free group of rank 2")->fallthrough();
    auto* qm_rolli = qm->add_subcommand("rolli", "evaluate f_alpha on a word")->fallthrough();
    auto* qm_defect = qm->add_subcommand("defect", "certified lower bound for the defect")->fallthrough();
    auto* qm_hom = qm->add_subcommand("homogenize", "homogenization with error certificate")->fallthrough();
    std::string qm_alpha, qm_word;
    int qm_L = 3;
    double qm_D = -1, qm_tol = 1e-3;
    for (auto* c : {qm_rolli, qm_defect, qm_hom})
        c->add_option("--alpha", qm_alpha, "odd sequence file {\"1\": v, ...}")->required();
    qm_rolli->add_option("--word", qm_word, "word as JSON array")->required();
    qm_hom->add_option("--word", qm_word, "word as JSON array")->required();
    qm_defect->add_option("-L,--ball", qm_L, "max word length");
    qm_hom->add_option("-D,--defect", qm_D, "defect upper bound (default: observed L=4 bound)");
    qm_hom->add_option("--tol", qm_tol);
    qm->require_subcommand(1);

    // ext
    auto* ext = app.add_subcommand("ext", "central extensions from 2-cocycles")->fallthrough();
    auto* ext_build = ext->add_subcommand("build", "normalize, build and verify the extension")->fallthrough();
    auto* ext_check = ext->add_subcommand("check", "test the cocycle identity")->fallthrough();
    std::string ext_cocycle;
    for (auto* c : {ext_build, ext_check})
        c->add_option("--cocycle", ext_cocycle, "cocycle file")->required();
    ext->require_subcommand(1);

    // it
    auto* it = app.add_subcommand("it", "higher bounded Euler cocycle")->fallthrough();
    auto* it_eul = it->add_subcommand("eul", "Monte-Carlo estimate of eul(g_0, ..., g_{n+1})")->fallthrough();
    std::string it_matrices;
    long it_samples = 100000;
    int it_dim = 0;
    double it_delta = 0.01;
    std::uint64_t it_seed = 0;
    it_eul->add_option("--matrices", it_matrices, "file {\"matrices\": [[[...]],...]}")->required();
    it_eul->add_option("--dim,-n", it_dim, "cocycle dimension n; matrices are (n+1)x(n+1)");
    it_eul->add_option("--samples,-N", it_samples);
    it_eul->add_option("--delta", it_delta, "confidence 1 - delta");
    it_eul->add_option("--seed", it_seed)->required();
    it->require_subcommand(1);

    // simpvol
    auto* sv = app.add_subcommand("simpvol", "surface simplicial volume bounds")->fallthrough();
    int sv_genus = 2, sv_punct = 0, sv_cover = 1;
    sv->add_option("--genus", sv_genus)->required();
    sv->add_option("--punctures", sv_punct);
    sv->add_option("--cover", sv_cover, "covering degree d for the upper bound");

    // accepted across the representation commands; deterministic ones just
    // echo it back so runs stay self-describing
    long long echo_seed = -1;
    for (auto* c : {euler, mw, survey, fp, sc})
        c->add_option("--seed", echo_seed, "echoed in the output");

    CLI11_PARSE(app, argc, argv);

    int exit_code = 0;
    try {
        json out;
        if (*rot) {
            const el::Lift f = parse_lift_arg(rot_lift);
            const el::Enclosure e = el::translation_number(f, rot_tol);
            double r = e.mid() - std::floor(e.mid());
            if (r >= 1.0) r = 0.0;
            out = enclosure_json(e);
            out["rot"] = r;
        } else if (*tauc) {
            const el::LiftedRep rep = load_rep(tau_rep);
            const json pairs = el::load_json_file(tau_pairs);
            if (!pairs.is_array()) throw el::SchemaError("pairs: expected an array");
            json records = json::array();
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto& p = pairs[i];
                if (!p.is_array() || p.size() != 2)
                    throw el::SchemaError("pairs[" + std::to_string(i) + "]: expected [word, word]");
                const el::Word w1 = el::word_from_json(p[0], "pairs");
                const el::Word w2 = el::word_from_json(p[1], "pairs");
                const el::TauValue t =
                    el::tau(rep.lift_of_word(w1), rep.lift_of_word(w2), tau_tol);
                records.push_back({{"value", t.value}, {"err", t.err}});
            }
            out = {{"records", records}, {"tol", tau_tol}};
        } else if (*euler) {
            const el::LiftedRep rep = load_rep(euler_rep);
            if (rep.presentation().punctures == 0) {
                const el::RelatorReport rr = el::relator_translation(rep, euler_tol);
                out = {{"kind", "closed"}, {"e", rr.e}, {"residual", rr.residual}};
            } else {
                const el::EulerNumber en = el::euler_number_punctured(rep, euler_tol);
                json rots = json::array();
                for (const auto& enc : en.boundary_rot) rots.push_back(enclosure_json(enc));
                out = {{"kind", "punctured"}, {"e", en.e}, {"err", en.err}, {"boundary_rot", rots}};
            }
        } else if (*mw) {
            const el::MilnorWoodReport rep = el::milnor_wood_check(load_rep(mw_rep), mw_tol);
            out = {{"e", rep.e}, {"err", rep.err}, {"chi", rep.chi},
                   {"ok", rep.ok}, {"equality", rep.equality}};
            if (!rep.ok) {
                std::cerr << "Milnor-Wood bound violated: |e| > |chi| + err\n";
                exit_code = 2;
            }
        } else if (*survey) {
            const auto witnesses = el::elliptic_survey(load_rep(survey_rep), survey_ball);
            json ws = json::array();
            for (const auto& w : witnesses)
                ws.push_back({{"word", w.word}, {"trace", w.trace}});
            out = {{"witnesses", ws}, {"count", witnesses.size()}, {"ball", survey_ball}};
        } else if (*fp) {
            const el::Fingerprint f = el::fingerprint(load_rep(fp_rep), fp_ball, fp_tol);
            json words = json::array();
            for (const auto& w : f.words) words.push_back(w);
            json taus = json::array();
            for (const auto& row : f.tau) {
                json r = json::array();
                for (const auto& t : row) r.push_back({{"value", t.value}, {"err", t.err}});
                taus.push_back(r);
            }
            json rots = json::array();
            for (const auto& e : f.rot_generators) rots.push_back(enclosure_json(e));
            out = {{"words", words}, {"tau", taus}, {"rot_generators", rots}};
        } else if (*sc) {
            const el::SemiConjugacyReport rep =
                el::semi_conjugacy_map(load_rep(sc_rep1), load_rep(sc_rep2), sc_ball, sc_grid);
            out = {{"grid", rep.grid},
                   {"values", rep.values},
                   {"monotonicity_violations", rep.monotonicity_violations},
                   {"periodicity_residual", rep.periodicity_residual},
                   {"equivariance_residual", rep.equivariance_residual},
                   {"fingerprint_warning", rep.fingerprint_warning},
                   {"fixed_point_hazard", rep.fixed_point_hazard}};
            if (rep.fingerprint_warning)
                std::cerr << "warning: generator rotation numbers disagree; "
                             "the representations may not be semi-conjugate\n";
        } else if (*qm) {
            const el::OddSequence alpha =
                el::odd_sequence_from_json(el::load_json_file(qm_alpha));
            const el::Quasimorphism f = el::rolli_quasimorphism(alpha);
            if (*qm_rolli) {
                const el::Word w = el::word_from_json(json::parse(qm_word), "word");
                out = {{"value", el::rolli_eval(alpha, el::reduce_word(w))}};
            } else if (*qm_defect) {
                out = {{"defect_lower_bound", el::defect_lower_bound(f, qm_L)}, {"L", qm_L}};
            } else {
                const el::Word w = el::word_from_json(json::parse(qm_word), "word");
                const double D = qm_D >= 0 ? qm_D : el::defect_lower_bound(f, 4);
                const el::HomogenizedValue h = el::homogenize(f, el::reduce_word(w), D, qm_tol);
                out = {{"value", h.value}, {"err", h.err}, {"power", h.power}, {"D", D}};
            }
        } else if (*ext) {
            const el::TwoCocycle phi = el::cocycle_from_json(el::load_json_file(ext_cocycle));
            if (*ext_check) {
                const auto bad = el::cocycle_violation(phi);
                out = {{"cocycle_ok", !bad.has_value()}};
                if (bad) out["first_violation"] = {(*bad)[0], (*bad)[1], (*bad)[2]};
            } else {
                const el::TwoCocycle norm = el::normalize_cocycle(phi);
                const el::ExtensionGroup E = el::build_extension(norm);
                const el::TwoCocycle back = el::cocycle_from_section(E, el::canonical_section(E));
                out = {{"ok", true},
                       {"central", E.coefficient_central()},
                       {"roundtrip_exact", back.values == norm.values},
                       {"normalized_cocycle", el::cocycle_to_json(norm)}};
            }
        } else if (*it) {
            const json j = el::load_json_file(it_matrices);
            if (!j.contains("matrices") || !j["matrices"].is_array())
                throw el::SchemaError("matrices: expected {\"matrices\": [...]}");
            std::vector<el::MatN> mats;
            for (const auto& m : j["matrices"]) {
                el::MatN mat;
                for (const auto& row : m) mat.push_back(row.get<el::VecN>());
                mats.push_back(std::move(mat));
            }
            if (it_dim > 0 &&
                (mats.empty() || static_cast<int>(mats[0].size()) != it_dim + 1))
                throw el::SchemaError("matrices do not match --dim " + std::to_string(it_dim));
            const el::EulEstimate est =
                el::eul_estimate(mats, it_samples, it_delta, it_seed);
            out = {{"mean", est.mean},         {"half_width", est.half_width},
                   {"samples", est.samples},   {"discarded", est.discarded},
                   {"seed", est.seed},         {"delta", it_delta}};
        } else if (*sv) {
            const el::SurfaceBounds b = el::surface_bounds(sv_genus, sv_punct, sv_cover);
            out = {{"genus", b.genus},
                   {"punctures", b.punctures},
                   {"cover", b.cover_degree},
                   {"exact", b.exact},
                   {"lower", b.lower},
                   {"upper", b.upper_d},
                   {"cover_genus", b.cover_genus},
                   {"provenance",
                    {{"exact", b.exact_provenance},
                     {"lower", b.lower_provenance},
                     {"upper", b.upper_provenance}}}};
        }
        if (echo_seed >= 0) out["seed"] = echo_seed;
        emit(out, output);
    } catch (const el::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const el::NotARepresentation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const el::NotACocycle& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const el::AssociativityFailure& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const el::BadDeterminant& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const el::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
