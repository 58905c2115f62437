#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "qdt/space.hpp"

namespace qdt {

// JSON: {"name": ..., "points": [labels], "matrix": [[values]]} with values
// "a", "a/b" or "inf".
DistanceSpace parse_space_json(std::string_view text);
// Line format, '#' starts a comment:
//   name NAME
//   points p q r
//   default VALUE        (optional; unspecified entries are inf otherwise)
//   dist p q VALUE
DistanceSpace parse_space_lines(std::string_view text);
// Chooses JSON when the first non-blank character is '{'.
DistanceSpace parse_space(std::string_view text);
// A file path, or "catalog:NAME" for a finite catalog space.
DistanceSpace load_space(const std::string& source);

nlohmann::json grel_json(const GRel& d);
nlohmann::json space_json(const DistanceSpace& s);
std::string space_to_json(const DistanceSpace& s);
std::string space_to_lines(const DistanceSpace& s);
// Label pairs (x, y), x ≠ y, with rel(x, y) = 0.
nlohmann::json pairs_json(const GRel& rel, const std::vector<std::string>& labels);

// Graphviz digraph of the zero set of rel without reflexive and
// transitively implied edges.
std::string dot_relation(const std::string& graph_name, const std::vector<std::string>& labels, const GRel& rel);

}  // namespace qdt
