#pragma once

#include <string>

#include <json.hpp>

#include "bnr/network.hpp"
#include "bnr/subhypercube.hpp"
#include "bnr/types.hpp"

namespace bnr {

// JSON forms used on the CLI surface: perturbations and configurations are
// objects with 0/1 values, attractors use "*" for free components. Keys are
// emitted in lexicographic order.

nlohmann::json assignment_to_json(const PartialAssignment& a);
nlohmann::json configuration_to_json(const Configuration& x, const BooleanNetwork& f);
nlohmann::json attractor_to_json(const Subhypercube& h, const BooleanNetwork& f);

// Strict parsing: the value must be a JSON object mapping known component
// names to the integers 0 or 1. Raises syntax / unknown_component.
PartialAssignment assignment_from_json(const nlohmann::json& j, const BooleanNetwork& f);
PartialAssignment assignment_from_json_text(const std::string& text, const BooleanNetwork& f);

// Requires the assignment to cover every component.
Configuration configuration_from_json_text(const std::string& text, const BooleanNetwork& f);

} // namespace bnr
