#pragma once

#include <string>

#include <json.hpp>

#include "eulerlab/extensions.hpp"
#include "eulerlab/quasimorphism.hpp"
#include "eulerlab/surfacereps.hpp"

namespace eulerlab {

using json = nlohmann::json;

json load_json_file(const std::string& path);

// {"kind": "rotation"|"translate"|"pl"|"mobius"|"compose"|"inverse", ...}
Lift lift_from_json(const json& j, const std::string& where = "lift");
json lift_to_json(const Lift& f);

// {"genus": g, "punctures": n, "generators": {"a1": <lift>, ...}}
// Exactly the free generators must be present; all-Mobius files keep their
// matrices for trace surveys. Closed presentations are checked against the
// relator and raise NotARepresentation.
LiftedRep rep_from_json(const json& j, bool check_relator = true,
                        double relator_tol = 1e-6);

// {"1": value, "3": value, ...} with positive integer keys
OddSequence odd_sequence_from_json(const json& j, const std::string& where = "alpha");

// array of signed integers
Word word_from_json(const json& j, const std::string& where = "word");

// {"base": "cyclic", "order": m, "values": [[...]]} or
// {"base": "window", "window": W, "values": [[...]]}
TwoCocycle cocycle_from_json(const json& j);
json cocycle_to_json(const TwoCocycle& c);

} // namespace eulerlab
