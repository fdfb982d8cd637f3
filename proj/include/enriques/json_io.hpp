#pragma once
#include <json.hpp>

#include "enriques/brauer.hpp"
#include "enriques/cyclic_gmodule.hpp"

namespace enriques {

using nlohmann::json;

// Integers with |x| < 2^53 travel as JSON numbers, anything larger as a
// decimal string. Parsing accepts both forms.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json vec_to_json(const IntVec& v);
IntVec vec_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json group_to_json(const AbelianGroupInvariants& g);
AbelianGroupInvariants group_from_json(const json& j);

json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const json& j);

// {"order": d, "action": matrix, "gram": optional matrix}
json module_to_json(const CyclicGModule& m);
CyclicGModule module_from_json(const json& j);

json brauer_result_to_json(const BrauerResult& r);

/// Parse a JSON document, mapping syntax errors to InputError.
json parse_json(const std::string& text);

}  // namespace enriques
