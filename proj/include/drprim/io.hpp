#pragma once

// JSON file formats for systems, graphs, functions on G_T and labels.

#include "drprim/pathspace.hpp"
#include "drprim/primcat.hpp"

#include <json.hpp>

#include <string>

namespace drprim {

using Json = nlohmann::json;

/// {"k": 1, "points": ["p0", ...], "maps": [[1, 2, 0]]}; throws Parse.
RawSystem parse_system(const Json& doc);
Json system_to_json(const FiniteSystem& sys);

/// {"vertices": [...], "edges": [{"name", "start", "end"}], "representatives": ["g,f:e", ...]}.
struct GraphDocument {
  RawGraph graph;
  std::vector<std::string> representatives;
};
GraphDocument parse_graph(const Json& doc);
Json graph_to_json(const Graph& g, const std::vector<EvPath>& representatives);

/// [{"range": "p0", "displacement": [3], "source": "p0", "re": 1, "im": 0}, ...].
/// Elements are checked for membership in G_T.
CcFunction parse_function(const FiniteSystem& sys, const Json& doc);
Json function_to_json(const FiniteSystem& sys, const CcFunction& f);

/// {"quasi_orbit": "p0", "character": ["1/2"]}.
PrimIdealLabel parse_label(const FiniteSystem& sys, const Json& doc);
Json label_to_json(const FiniteSystem& sys, const PrimIdealLabel& label);

/// "p0:1/3" or "a:1/4,1/2".
LabelledPoint parse_labelled_point(const FiniteSystem& sys, const std::string& text);

Json lattice_to_json(const Lattice& h);
Json vector_to_json(const ZVector& v);
Json points_to_json(const FiniteSystem& sys, const PointSet& points);

/// 64-bit FNV-1a of a string, as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

Json read_json_file(const std::string& path);

}  // namespace drprim
