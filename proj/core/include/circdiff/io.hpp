#pragma once

// JSON documents for diffeomorphisms, vector fields and orbit points. Every document
// written here carries "schema_version"; the layouts are described in docs/schema.md.

#include <string>
#include <string_view>

#include "circdiff/circle.hpp"
#include "circdiff/projective_structure.hpp"
#include "circdiff/virasoro.hpp"

namespace circdiff {

inline constexpr int kSchemaVersion = 1;

// {"shift": s, "cos": [...], "sin": [...]} or {"mobius": [a, b, c, d], "structure": "torus"}.
// Throws ParseError on malformed documents and InvalidDiffeo on non-monotone lifts.
CircleDiffeo diffeo_from_json(std::string_view text);
std::string diffeo_to_json(const CircleDiffeo& d);

// {"mean": m, "cos": [...], "sin": [...]}
VectorFieldS1 field_from_json(std::string_view text);
std::string field_to_json(const VectorFieldS1& xi);

// {"charge": c, "grid": N, "mean": m, "cos": [...], "sin": [...]}, the coefficient arrays
// being the trigonometric interpolant of the grid samples.
std::string orbit_point_to_json(const OrbitPoint& p);
OrbitPoint orbit_point_from_json(std::string_view text);

ProjectiveStructure structure_from_name(std::string_view name);

}  // namespace circdiff
