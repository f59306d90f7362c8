// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cardsig/psl.hpp"

namespace cardsig {

// All artifacts serialize through nlohmann's ordered JSON so output is
// byte-stable and round-trips exactly.
using Json = nlohmann::ordered_json;

// { "points": [ { "id": int, "x": "num/den", "y": "num/den" }, ... ] }
Json points_to_json(const std::vector<Point>& pts);
std::vector<Point> points_from_json(const Json& j);

// Point-set document plus "edges": [[id,id],...]
Json graph_to_json(const PslGraph& g);
PslGraph graph_from_json(const Json& j);

// { "points": [...], "degrees": [ { "id", "n", "s", "e", "w" }, ... ] }
Json signature_to_json(const CardinalSignature& sig);
CardinalSignature signature_from_json(const Json& j);

// File helpers.  read_json throws Error{ValidationFailure} on unreadable or
// unparsable input; write_text writes bytes verbatim.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cardsig
