#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wfskit/fincat.hpp"
#include "wfskit/finset.hpp"
#include "wfskit/holim.hpp"
#include "wfskit/lifting.hpp"
#include "wfskit/sobj.hpp"

namespace wfskit {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "wfskit/1";

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t h);

json to_json(const FinCategory& c);
FinCategory category_from_json(const json& j);

json to_json(const FinFunctor& f);
FinFunctor functor_from_json(const json& j);

/// {"dims", "nd", "faces"} plus "truncated" for skeleta.
json to_json(const SSet& x);
SSet sset_from_json(const json& j);

/// A simplex as [degeneracy word, generator name].
json simplex_to_json(const SSet& x, const Simplex& s);
Simplex simplex_from_json(const SSet& x, const json& j);

/// {"assign": {...}} relative to known endpoints.
json assign_to_json(const SSetMap& f);
SSetMap map_from_json(const SSet& source, const SSet& target, const json& j);
/// Self-contained map: {"source", "target", "assign"}.
json to_json(const SSetMap& f);
SSetMap map_from_json(const json& j);

json to_json(const SetMap& f);
SetMap setmap_from_json(const json& j);

/// {"lambda", "rho", "top", "bottom"}: lambda and rho self-contained.
json to_json(const LiftingSquare& sq);
LiftingSquare square_from_json(const json& j);

json to_json(const Family& a);
Family family_from_json(const json& j);

/// {"trunc", "total", "index", "p"}.
json to_json(const SimpObject& x);
SimpObject sobj_from_json(const json& j);
/// {"source", "target", "total", "index"}.
json to_json(const SimpMorphism& f);
SimpMorphism smorphism_from_json(const json& j);

/// {"shape", "values", "arrows"}; identity arrows may be omitted.
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);
bool is_sobj_diagram(const json& j);
SobjDiagram sobj_diagram_from_json(const json& j);

json to_json(const HomologyProfile& p);

}  // namespace wfskit
