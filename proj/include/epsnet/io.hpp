#pragma once

#include "epsnet/constructions.hpp"
#include "epsnet/gadgets.hpp"
#include "epsnet/verification.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace epsnet {

using Json = nlohmann::ordered_json;

// Parses JSON keeping every numeric literal as its source text.
Json parse_json_exact(const std::string& text);

PointSet parse_point_set(const std::string& text);
PointSet read_point_set(const std::string& path);
std::string point_set_json(const PointSet& P);

std::string read_file(const std::string& path);
// Writes through a temporary file and renames it into place.
void write_file(const std::string& path, const std::string& contents);

std::string sha256_hex(const std::string& data);

Json scalar_json(const Scalar& s);
Json point_json(const Point& p);
Json points_json(const std::vector<Point>& pts);
Json range_json(const RangeWitness& r);
Json report_json(const VerificationReport& rep);
Json trace_json(const ConstructionTrace& t);
Json claims_json(const GadgetInstance& g);

std::string dump(const Json& j);

}  // namespace epsnet
