// JSON formats:
//   rack      {"n": int, "table": [[int]]}
//   group     {"n": int, "mult": [[int]], "class": [int]}
//   graph     {"n": int, "x": [int], "y": [int], "v0": int|null}
//   covering  graph fields plus {"N": int, "x_labels": [int], "y_labels": [int]}
//   orbit     {"rack_n": int, "points": [[r,s,t]], "sigma1": [int], "sigma2": [int], "base": int}
#pragma once

#include <json.hpp>

#include <string>

#include "hurwitz/covering.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/rack.hpp"
#include "hurwitz/schreier.hpp"

namespace hurwitz {

using Json = nlohmann::json;

Json rack_to_json(const Rack& r);
RackPtr rack_from_json(const Json& j);

Json graph_to_json(const SchreierGraph& g);
SchreierGraph graph_from_json(const Json& j);

Json covering_to_json(const LabeledCovering& c);
LabeledCovering covering_from_json(const Json& j);

Json orbit_to_json(const HurwitzOrbit& o);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Resolves a rack source: a JSON file path (rack or group+class format) or a
// stock name: "S3-transpositions", "S4-transpositions", "dihedral-N",
// "trivial-N".
RackPtr resolve_rack_source(const std::string& source);

// Resolves a graph source: stock graph name or JSON file path.
SchreierGraph resolve_graph_source(const std::string& source);

}  // namespace hurwitz
