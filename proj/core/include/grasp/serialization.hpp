#pragma once

#include <string>

#include "grasp/boson.hpp"
#include "grasp/fermion_rep.hpp"
#include "grasp/state_spec.hpp"

namespace grasp {

/// Canonical polynomial JSON:
/// { "generators": [labels...],
///   "terms": [ { "monomial": [indices ascending], "re": x, "im": y }, ... ] }
/// Terms are written in ascending monomial order; readers canonicalize
/// defensively (arbitrary index order, repeated monomials, sub-threshold
/// coefficients).
std::string poly_to_json(const GrassmannPoly& poly);
GrassmannPoly poly_from_json(const std::string& text);

/// Polynomial JSON extended with { "flavor": "p"|"phi", "modes": n }.
std::string representation_to_json(const PRepresentation& rep);
PRepresentation representation_from_json(const std::string& text);

/// { "modes": n, "elements": [ { "bra": "01", "ket": "01", "re": x, "im": y } ],
///   "allow_parity_violation": bool, "skip_psd_check": bool }
/// Occupation bitstrings put mode 1 first.
std::string state_spec_to_json(const StateSpec& spec);
StateSpec state_spec_from_json(const std::string& text);

/// { "xi_halfwidth": W, "points": M, "values": [[re, im], ...] } row-major
/// with the real-axis index outer.
std::string grid_field_to_json(const GridField& field);
GridField grid_field_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace grasp
