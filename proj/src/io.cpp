#include "umtk/io.hpp"

#include <sstream>

namespace umtk::io {

namespace {

std::string quoted(const std::string& s) { return Json(s).dump(); }

Rational parse_distance(const Json& cell) {
  if (!cell.is_string()) throw Error(ErrorKind::Parse, "distance entries must be strings, got " + cell.dump());
  return Rational::parse(cell.get<std::string>());
}

Json tree_node_to_json(const RepNode& node, bool labeled) {
  if (node.is_leaf()) return Json{{"point", *node.point}};
  Json out = Json::object();
  if (labeled) out["label"] = node.label.str();
  Json kids = Json::array();
  for (const auto& c : node.children) kids.push_back(tree_node_to_json(c, labeled));
  out["children"] = std::move(kids);
  return out;
}

RepNode tree_node_from_json(const Json& doc, int& labeled_inner, int& unlabeled_inner) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "tree node must be an object");
  if (doc.contains("point")) {
    if (doc.contains("children")) throw Error(ErrorKind::InvalidTree, "a node cannot have both a point and children");
    if (!doc["point"].is_string()) throw Error(ErrorKind::Parse, "point names must be strings");
    RepNode leaf{Rational(0), {}, doc["point"].get<std::string>()};
    if (doc.contains("label")) leaf.label = parse_distance(doc["label"]);
    return leaf;
  }
  if (!doc.contains("children") || !doc["children"].is_array())
    throw Error(ErrorKind::Parse, "internal tree node needs a \"children\" array");
  RepNode node;
  if (doc.contains("label")) {
    node.label = parse_distance(doc["label"]);
    ++labeled_inner;
  } else {
    ++unlabeled_inner;
  }
  for (const auto& c : doc["children"]) node.children.push_back(tree_node_from_json(c, labeled_inner, unlabeled_inner));
  return node;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string space_to_json(const Space& space) {
  std::string out = "{\"points\": [";
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ",";
    out += quoted(space.point(i));
  }
  out += "], \"dist\": [";
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (j) out += ",";
      out += "\"" + space.d(i, j).str() + "\"";
    }
    out += "]";
  }
  out += "]}\n";
  return out;
}

bool is_space_document(const Json& doc) { return doc.is_object() && doc.contains("points"); }

Space space_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("dist"))
    throw Error(ErrorKind::Parse, "space document needs \"points\" and \"dist\"");
  const Json& pts = doc["points"];
  const Json& dist = doc["dist"];
  if (!pts.is_array() || !dist.is_array()) throw Error(ErrorKind::Parse, "\"points\" and \"dist\" must be arrays");
  std::vector<std::string> points;
  for (const auto& p : pts) {
    if (!p.is_string()) throw Error(ErrorKind::Parse, "point names must be strings");
    points.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> matrix;
  for (const auto& row : dist) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "\"dist\" rows must be arrays");
    std::vector<Rational> r;
    for (const auto& cell : row) r.push_back(parse_distance(cell));
    matrix.push_back(std::move(r));
  }
  return validate_semimetric(std::move(points), std::move(matrix));
}

Space space_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return space_from_json(doc);
}

Json tree_to_json(const RepTree& tree) { return tree_node_to_json(tree.root, tree.labeled); }

RepTree tree_from_json(const Json& doc) {
  int labeled_inner = 0;
  int unlabeled_inner = 0;
  RepTree tree;
  tree.root = tree_node_from_json(doc, labeled_inner, unlabeled_inner);
  if (labeled_inner > 0 && unlabeled_inner > 0) throw Error(ErrorKind::InvalidTree, "some internal nodes are labeled and some are not");
  tree.labeled = unlabeled_inner == 0;
  validate_tree(tree);
  return tree;
}

Json partition_to_json(const DiametricalGraph& graph, const MultipartitePartition& partition) {
  Json parts = Json::array();
  for (const auto& part : partition.parts) {
    Json p = Json::array();
    for (auto v : part) p.push_back(graph.vertices()[v]);
    parts.push_back(std::move(p));
  }
  return Json{{"parts", std::move(parts)}};
}

Json scaling_to_json(const Scaling& scaling) {
  Json out = Json::array();
  for (const auto& [a, b] : scaling) out.push_back(Json::array({a.str(), b.str()}));
  return out;
}

Json point_map_to_json(const Space& x, const Space& y, const PointMap& phi) {
  Json out = Json::object();
  for (std::size_t i = 0; i < phi.size(); ++i) out[x.point(i)] = y.point(phi[i]);
  return out;
}

Json witness_to_json(const Space& x, const Space& y, const WeakSimWitness& w) {
  Json out = Json::object();
  out["scaling"] = scaling_to_json(w.scaling);
  out["phi"] = point_map_to_json(x, y, w.phi);
  return out;
}

Json isometry_to_json(const Space& x, const Space& y, const IsometryWitness& w) {
  return Json{{"phi", point_map_to_json(x, y, w.phi)}};
}

Json class_report_to_json(const ClassReport& report) {
  Json out = Json::object();
  out["in_R"] = report.in_R;
  out["in_R_tilde"] = report.in_R_tilde;
  out["in_D"] = report.in_D;
  out["in_T"] = report.in_T;
  out["levels"] = report.levels;
  Json labels = Json::array();
  for (const auto& l : report.label_multiset) labels.push_back(l.str());
  out["label_multiset"] = std::move(labels);
  return out;
}

namespace {

Json members_json(const Space& space, const std::vector<std::size_t>& members) {
  Json out = Json::array();
  for (auto m : members) out.push_back(space.point(m));
  return out;
}

}  // namespace

Json ballean_to_json(const Space& space, const Ballean& ballean) {
  Json balls = Json::array();
  for (const auto& b : ballean.balls) {
    Json entry = Json::object();
    entry["members"] = members_json(space, b.members);
    entry["center"] = space.point(b.center);
    entry["radius"] = b.radius.str();
    balls.push_back(std::move(entry));
  }
  return Json{{"balls", std::move(balls)}};
}

Json hasse_to_json(const Space& space, const HasseDiagram& h) {
  Json vertices = Json::array();
  for (const auto& b : h.ballean().balls) vertices.push_back(members_json(space, b.members));
  Json arcs = Json::array();
  for (const auto& [a, b] : h.arcs()) arcs.push_back(Json::array({a, b}));
  Json out = Json::object();
  out["vertices"] = std::move(vertices);
  out["arcs"] = std::move(arcs);
  return out;
}

Json vertex_map_to_json(const Space& x, const Space& y, const HasseDiagram& hx, const HasseDiagram& hy, const VertexMap& map) {
  Json out = Json::array();
  for (std::size_t v = 0; v < map.size(); ++v)
    out.push_back(Json::array({members_json(x, hx.ballean().balls[v].members), members_json(y, hy.ballean().balls[map[v]].members)}));
  return Json{{"map", std::move(out)}};
}

std::string tree_to_dot(const RepTree& tree) {
  const FlatTree flat = flatten(tree);
  std::ostringstream os;
  os << "graph T {\n";
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const auto& node = flat.nodes[i];
    os << "  n" << i << " [label=\"";
    if (node.is_leaf())
      os << dot_escape(*node.point) << "\", shape=plaintext];\n";
    else
      os << (tree.labeled ? node.label.str() : std::string()) << "\", shape=" << (tree.labeled ? "ellipse" : "point") << "];\n";
  }
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (auto c : flat.nodes[i].children) os << "  n" << i << " -- n" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const DiametricalGraph& graph) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : graph.vertices()) os << "  \"" << dot_escape(v) << "\";\n";
  for (const auto& [u, v] : graph.edges())
    os << "  \"" << dot_escape(graph.vertices()[u]) << "\" -- \"" << dot_escape(graph.vertices()[v]) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string hasse_to_dot(const Space& space, const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph H {\n  rankdir=BT;\n";
  for (std::size_t v = 0; v < h.size(); ++v)
    os << "  b" << v << " [label=\"" << dot_escape(ball_text(space, h.ballean().balls[v].members)) << "\"];\n";
  for (const auto& [a, b] : h.arcs()) os << "  b" << a << " -> b" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace umtk::io
