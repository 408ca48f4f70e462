#pragma once

#include <string>

#include <json.hpp>

#include "strandfloer/algebra.hpp"
#include "strandfloer/grid.hpp"
#include "strandfloer/index.hpp"

namespace strandfloer {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"g", "mode", "pairs"}; pairs[l-1] holds the positions of label l.
Json circle_to_json(const PointedMatchedCircle& pmc);
/// Throws std::invalid_argument on malformed input.
PointedMatchedCircle circle_from_json(const Json& j);
/// Accepts inline JSON text or the path of a file containing it.
PointedMatchedCircle parse_matching(const std::string& text_or_path);

Json generator_to_json(const MatchedGenerator& gen);
Json floer_generator_to_json(const FloerGenerator& x);

/// Sections in fixed order: schema, meta, idempotents, generators,
/// differential ([i, j] for each term j of d(i)), product ([i, j, p] for
/// each term p of i * j), dims (dim hom(s, t) by idempotent index).
Json algebra_to_json(const StrandsAlgebra& alg, bool include_product);

/// Quiver of the algebra: one node per idempotent, one edge per generator.
/// Generators occurring in some differential are drawn dotted.
std::string algebra_to_dot(const StrandsAlgebra& alg);

/// Allowed cells, intersection pattern and the point dictionary.
Json grid_to_json(const GridSpec& spec);

Json rigidity_to_json(const RigidityReport& report);

}  // namespace strandfloer
