#pragma once

#include <string>

#include "json.hpp"
#include "qhm/boundary_moduli.hpp"
#include "qhm/gram.hpp"
#include "qhm/hform.hpp"
#include "qhm/positive_moduli.hpp"
#include "qhm/quat.hpp"
#include "qhm/triangle.hpp"

// JSON forms. Quaternions are [a0, a1, a2, a3] (a bare number is read as real).
// Index sets are 1-based. Malformed input raises UsageError.
namespace qhm {

using json = nlohmann::json;

void to_json(json& j, const Quaternion& q);
void from_json(const json& j, Quaternion& q);

void to_json(json& j, const StratumTag& s);
void from_json(const json& j, StratumTag& s);

void to_json(json& j, const HVector& v);
void from_json(const json& j, HVector& v);

void to_json(json& j, const GramMatrix& G);
void from_json(const json& j, GramMatrix& G);

void to_json(json& j, const Inertia& in);
void from_json(const json& j, Inertia& in);

void to_json(json& j, const Isometry& g);
void from_json(const json& j, Isometry& g);

void to_json(json& j, const PartitionStructure& s);
void from_json(const json& j, PartitionStructure& s);

void to_json(json& j, const BoundaryCoordinate& c);
void from_json(const json& j, BoundaryCoordinate& c);

void to_json(json& j, const ParabolicCoordinate& c);
void from_json(const json& j, ParabolicCoordinate& c);

void to_json(json& j, const RegularCoordinate& c);
void from_json(const json& j, RegularCoordinate& c);

void to_json(json& j, const PositiveCoordinate& c);
void from_json(const json& j, PositiveCoordinate& c);

void to_json(json& j, const TriangleParams& t);
void from_json(const json& j, TriangleParams& t);

void to_json(json& j, const PairConfiguration& c);

// {"points": [...]} or a bare array; points without a model tag get `fallback`
Tuple tuple_from_json(const json& j, Model fallback = Model::Ball);
json tuple_to_json(const Tuple& p);

json parse_json_text(const std::string& text);

}  // namespace qhm
