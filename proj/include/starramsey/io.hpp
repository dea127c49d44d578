#pragma once

#include <string>

#include <json.hpp>

#include "starramsey/colored_graph.hpp"
#include "starramsey/constructions.hpp"
#include "starramsey/decompositions.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/oracle.hpp"
#include "starramsey/verifier.hpp"

namespace starramsey {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& value);
Json to_json(const EllProfile& profile);
Json to_json(const RamseyAnswer& answer);
Json to_json(const StarCriticalAnswer& answer);
Json to_json(const ColoredGraph& g);
Json to_json(const StarWitness& witness);
Json to_json(const OracleResult& result);
Json to_json(const StarFamily& family);

/// {"t", "s", "m": [{"colors": [...], "value": ...}]}. Throws InvalidInput.
StarFamily star_family_from_json(const Json& doc);

/// {"n", "t", "center", "missing", "edges"}. Rejects duplicates, self loops,
/// out-of-range vertices or colors, uncovered pairs, u >= v, and missing pairs
/// not incident to the center. Throws InvalidInput.
ColoredGraph colored_graph_from_json(const Json& doc);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace starramsey
