#include "eulerlab/io.hpp"

#include <fstream>

namespace eulerlab {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return j;
}

namespace {

double need_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw SchemaError(where + ": expected a number");
    return j.get<double>();
}

long need_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
    return j.get<long>();
}

} // namespace

Lift lift_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind"))
        throw SchemaError(where + ": expected an object with a \"kind\" field");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "rotation")
            return Lift::rotation(need_number(j.at("alpha"), where + ".alpha"));
        if (kind == "translate")
            return Lift::translation(need_integer(j.at("k"), where + ".k"));
        if (kind == "pl") {
            const json& pts = j.at("points");
            if (!pts.is_array() || pts.empty())
                throw SchemaError(where + ".points: expected a nonempty array");
            std::vector<std::array<double, 2>> points;
            for (const auto& p : pts) {
                if (!p.is_array() || p.size() != 2)
                    throw SchemaError(where + ".points: expected [x, y] pairs");
                points.push_back({need_number(p[0], where + ".points"),
                                  need_number(p[1], where + ".points")});
            }
            const long shift = j.contains("shift") ? need_integer(j["shift"], where + ".shift") : 0;
            return Lift::piecewise_linear(std::move(points), shift);
        }
        if (kind == "mobius") {
            const json& m = j.at("matrix");
            if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
                !m[1].is_array() || m[1].size() != 2)
                throw SchemaError(where + ".matrix: expected a 2x2 array");
            const Mat2 mat{need_number(m[0][0], where), need_number(m[0][1], where),
                           need_number(m[1][0], where), need_number(m[1][1], where)};
            const long branch =
                j.contains("branch") ? need_integer(j["branch"], where + ".branch") : 0;
            return Lift::mobius(mat, branch);
        }
        if (kind == "compose") {
            const json& f = j.at("factors");
            if (!f.is_array() || f.empty())
                throw SchemaError(where + ".factors: expected a nonempty array");
            Lift out = lift_from_json(f[0], where + ".factors[0]");
            for (std::size_t i = 1; i < f.size(); ++i)
                out = compose(out, lift_from_json(f[i], where + ".factors[" + std::to_string(i) + "]"));
            return out;
        }
        if (kind == "inverse") return inverse(lift_from_json(j.at("of"), where + ".of"));
    } catch (const json::exception& e) {
        throw SchemaError(where + ": " + e.what());
    }
    throw SchemaError(where + ": unknown lift kind \"" + kind + "\"");
}

namespace {

void append_factors(const Lift::Node& n, json& arr);

json node_to_json(const Lift::Node& n) {
    using Kind = Lift::Node::Kind;
    switch (n.kind) {
        case Kind::Rotation: return {{"kind", "rotation"}, {"alpha", n.alpha}};
        case Kind::Translate: return {{"kind", "translate"}, {"k", n.k}};
        case Kind::PL: {
            json pts = json::array();
            for (std::size_t i = 0; i < n.xs.size(); ++i)
                pts.push_back({n.xs[i], n.ys[i]});
            return {{"kind", "pl"}, {"points", pts}, {"shift", n.shift}};
        }
        case Kind::Mobius:
            return {{"kind", "mobius"},
                    {"matrix", {{n.m.a, n.m.b}, {n.m.c, n.m.d}}},
                    {"branch", n.branch}};
        case Kind::Compose: {
            json factors = json::array();
            append_factors(n, factors);
            return {{"kind", "compose"}, {"factors", factors}};
        }
    }
    return nullptr;
}

void append_factors(const Lift::Node& n, json& arr) {
    if (n.kind == Lift::Node::Kind::Compose) {
        append_factors(*n.lhs, arr);
        append_factors(*n.rhs, arr);
    } else {
        arr.push_back(node_to_json(n));
    }
}

} // namespace

json lift_to_json(const Lift& f) { return node_to_json(f.node()); }

LiftedRep rep_from_json(const json& j, bool check_relator, double relator_tol) {
    if (!j.is_object()) throw SchemaError("representation: expected an object");
    if (!j.contains("genus") || !j.contains("punctures"))
        throw SchemaError("representation: missing \"genus\" or \"punctures\"");
    const int g = static_cast<int>(need_integer(j["genus"], "genus"));
    const int n = static_cast<int>(need_integer(j["punctures"], "punctures"));
    SurfacePresentation pres(g, n);
    if (!j.contains("generators") || !j["generators"].is_object())
        throw SchemaError("representation: missing \"generators\" object");
    const json& gens = j["generators"];

    for (const auto& [name, value] : gens.items()) {
        (void)value;
        const int idx = pres.generator_index(name);
        if (idx < 0)
            throw SchemaError("generators." + name + ": not a generator of genus " +
                              std::to_string(g) + " with " + std::to_string(n) + " punctures");
        if (n >= 1 && idx == pres.c(n))
            throw SchemaError("generators." + name + ": the last boundary generator is "
                              "derived from the relator and must not be supplied");
    }

    bool all_mobius = true;
    for (int i = 1; i <= pres.num_free_generators(); ++i) {
        const std::string name = pres.generator_name(i);
        if (!gens.contains(name))
            throw SchemaError("generators." + name + ": missing");
        if (!gens[name].is_object() || !gens[name].contains("kind") ||
            gens[name]["kind"] != "mobius")
            all_mobius = false;
    }

    LiftedRep rep = [&]() {
        if (all_mobius) {
            std::vector<Mat2> mats;
            for (int i = 1; i <= pres.num_free_generators(); ++i) {
                const std::string name = pres.generator_name(i);
                const json& m = gens[name].at("matrix");
                if (!m.is_array() || m.size() != 2)
                    throw SchemaError("generators." + name + ".matrix: expected a 2x2 array");
                mats.push_back({need_number(m[0][0], name), need_number(m[0][1], name),
                                need_number(m[1][0], name), need_number(m[1][1], name)});
                if (!(Mat2{mats.back()}.det() > 0))
                    throw SchemaError("generators." + name +
                                      ".matrix: determinant must be positive");
            }
            return LiftedRep::from_mobius(pres, mats);
        }
        std::vector<Lift> lifts;
        for (int i = 1; i <= pres.num_free_generators(); ++i) {
            const std::string name = pres.generator_name(i);
            lifts.push_back(lift_from_json(gens[name], "generators." + name));
        }
        return LiftedRep(pres, std::move(lifts));
    }();

    if (check_relator && n == 0) relator_translation(rep, relator_tol);
    return rep;
}

OddSequence odd_sequence_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object of index -> value");
    std::map<int, double> support;
    for (const auto& [key, value] : j.items()) {
        int n = 0;
        try {
            n = std::stoi(key);
        } catch (...) {
            throw SchemaError(where + "." + key + ": key must be a positive integer");
        }
        if (n <= 0) throw SchemaError(where + "." + key + ": key must be a positive integer");
        support[n] = need_number(value, where + "." + key);
    }
    return OddSequence(std::move(support));
}

Word word_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of signed integers");
    Word w;
    for (const auto& l : j) w.push_back(static_cast<int>(need_integer(l, where)));
    return w;
}

TwoCocycle cocycle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base"))
        throw SchemaError("cocycle: expected an object with a \"base\" field");
    const std::string base = j["base"].get<std::string>();
    TwoCocycle c;
    int side = 0;
    if (base == "cyclic") {
        const int m = static_cast<int>(need_integer(j.at("order"), "cocycle.order"));
        c = TwoCocycle::on_group(FiniteGroupTable::cyclic(m));
        side = m;
    } else if (base == "window") {
        const int w = static_cast<int>(need_integer(j.at("window"), "cocycle.window"));
        c = TwoCocycle::on_window(w);
        side = 2 * w + 1;
    } else {
        throw SchemaError("cocycle.base: expected \"cyclic\" or \"window\"");
    }
    const json& vals = j.at("values");
    if (!vals.is_array() || static_cast<int>(vals.size()) != side)
        throw SchemaError("cocycle.values: expected a " + std::to_string(side) + "-row table");
    for (int r = 0; r < side; ++r) {
        if (!vals[r].is_array() || static_cast<int>(vals[r].size()) != side)
            throw SchemaError("cocycle.values[" + std::to_string(r) + "]: expected " +
                              std::to_string(side) + " entries");
        for (int col = 0; col < side; ++col)
            c.values[static_cast<std::size_t>(r) * side + col] =
                need_integer(vals[r][col], "cocycle.values");
    }
    return c;
}

json cocycle_to_json(const TwoCocycle& c) {
    json vals = json::array();
    const int side = c.side();
    for (int r = 0; r < side; ++r) {
        json row = json::array();
        for (int col = 0; col < side; ++col)
            row.push_back(c.values[static_cast<std::size_t>(r) * side + col]);
        vals.push_back(row);
    }
    if (c.base == TwoCocycle::Base::Finite)
        return {{"base", "cyclic"}, {"order", c.group.order}, {"values", vals}};
    return {{"base", "window"}, {"window", c.window}, {"values", vals}};
}

} // namespace eulerlab
