// JSON (and cell-table CSV) readers/writers for the library types. Key names
// here are the wire format of the command-line tools.
#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "orlicz/hammerstein.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/nfunction.hpp"

namespace orlicz {

using json = nlohmann::json;

/// {"kind": "power", "params": {"p": 2.0}}; sum members nest the same shape.
json spec_to_json(const NFunctionSpec& spec);
NFunctionSpec spec_from_json(const json& j);

std::string kind_name(NFunctionKind kind);
NFunctionKind kind_from_name(const std::string& name);

/// Spaces and grid functions are bare JSON arrays of numbers.
MeasureSpace space_from_json(const json& j);
GridFunction grid_from_json(const json& j);
json grid_to_json(const GridFunction& x);

/// Cell table "cell_index,weight,value" (header optional) -> space + values.
std::pair<MeasureSpace, GridFunction> cells_from_csv(const std::string& text);

/// Problem files: {space, nfunction, S (row-major), T (row-major),
/// f {kind, params, delta, coercivity {a, b, c}}, g, sigma}.
/// Nonlinearity kinds: "zero" and "poly" with params c1, c2, c3 meaning
/// f(u) = c1 u + c2 u^2 + c3 u^3.
HammersteinProblem problem_from_json(const json& j);

json solve_result_to_json(const SolveResult& result);

}  // namespace orlicz
