#pragma once

#include "umtk/ballean.hpp"
#include "umtk/classification.hpp"
#include "umtk/diametrical.hpp"
#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/space.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace umtk::io {

using Json = nlohmann::ordered_json;

/// Space document, byte-exact:
///   {"points": ["p","q"], "dist": [["0","2"],["2","0"]]}
/// followed by a newline.
std::string space_to_json(const Space& space);

/// Reads a space document and validates it. Throws Error(Parse) on a
/// malformed document and the validation errors of validate_semimetric.
Space space_from_json(std::string_view text);
Space space_from_json(const Json& doc);

/// Node = {"label":"2","children":[...]} or {"point":"p"}. Unlabeled trees
/// omit "label" on internal nodes.
Json tree_to_json(const RepTree& tree);
RepTree tree_from_json(const Json& doc);

bool is_space_document(const Json& doc);

Json partition_to_json(const DiametricalGraph& graph, const MultipartitePartition& partition);
Json scaling_to_json(const Scaling& scaling);
Json point_map_to_json(const Space& x, const Space& y, const PointMap& phi);
/// {"scaling":[["0","0"],...],"phi":{"p":"p1",...}}
Json witness_to_json(const Space& x, const Space& y, const WeakSimWitness& w);
Json isometry_to_json(const Space& x, const Space& y, const IsometryWitness& w);
Json class_report_to_json(const ClassReport& report);
Json ballean_to_json(const Space& space, const Ballean& ballean);
Json hasse_to_json(const Space& space, const HasseDiagram& h);
Json vertex_map_to_json(const Space& x, const Space& y, const HasseDiagram& hx, const HasseDiagram& hy, const VertexMap& map);

/// Internal nodes show labels, leaves show point names.
std::string tree_to_dot(const RepTree& tree);
std::string graph_to_dot(const DiametricalGraph& graph);
/// Arcs point from the smaller to the larger ball; vertices are labeled by
/// member sets and listed in ballean order.
std::string hasse_to_dot(const Space& space, const HasseDiagram& h);

}  // namespace umtk::io
