#include "umtk/rep_tree.hpp"

#include "umtk/diametrical.hpp"
#include "umtk/tree_canon.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace umtk {

namespace {

std::string smallest_point(const RepNode& node) {
  if (node.is_leaf()) return *node.point;
  std::string best = smallest_point(node.children.front());
  for (std::size_t i = 1; i < node.children.size(); ++i) best = std::min(best, smallest_point(node.children[i]));
  return best;
}

void order_children(RepNode& node) {
  struct Keyed {
    std::string code;
    std::string first_point;
    RepNode node;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(node.children.size());
  for (auto& child : node.children) {
    RepTree sub{child, true};
    keyed.push_back({canon_code_labeled(sub).code, smallest_point(child), std::move(child)});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.code, a.first_point) < std::tie(b.code, b.first_point);
  });
  node.children.clear();
  for (auto& k : keyed) node.children.push_back(std::move(k.node));
}

RepNode build_node(const Space& space) {
  if (space.size() == 1) return RepNode{Rational(0), {}, space.point(0)};

  auto parts = multipartite_parts(diametrical_graph(space));
  if (!parts)
    throw Error(ErrorKind::VerificationFailed, "diametrical graph of an ultrametric subspace is not complete multipartite");

  RepNode node{diameter(space), {}, std::nullopt};
  for (const auto& part : parts->parts) node.children.push_back(build_node(space.subspace(part)));
  order_children(node);
  return node;
}

void flatten_into(const RepNode& node, std::optional<std::size_t> parent, std::size_t depth, FlatTree& out) {
  const std::size_t self = out.nodes.size();
  out.nodes.push_back(FlatNode{parent, {}, node.label, node.point, depth});
  if (parent) out.nodes[*parent].children.push_back(self);
  for (const auto& child : node.children) flatten_into(child, self, depth + 1, out);
}

RepNode unflatten_node(const FlatTree& flat, std::size_t i) {
  const auto& f = flat.nodes[i];
  RepNode node{f.label, {}, f.point};
  for (auto c : f.children) node.children.push_back(unflatten_node(flat, c));
  return node;
}

}  // namespace

RepTree build_tree(const Space& space) {
  if (auto bad = ultrametric_violation(space)) {
    throw Error(ErrorKind::NotUltrametric,
                "d(" + space.point(bad->x) + ", " + space.point(bad->y) + ") = " + space.d(bad->x, bad->y).str() +
                    " exceeds max{d(" + space.point(bad->x) + ", " + space.point(bad->z) + "), d(" +
                    space.point(bad->z) + ", " + space.point(bad->y) + ")}");
  }
  return RepTree{build_node(space), true};
}

void validate_tree(const RepTree& tree) {
  std::unordered_set<std::string> seen;
  std::function<void(const RepNode&)> visit = [&](const RepNode& node) {
    if (node.is_leaf()) {
      if (!node.point) throw Error(ErrorKind::InvalidTree, "leaf without a point");
      if (!node.label.is_zero()) throw Error(ErrorKind::InvalidTree, "leaf '" + *node.point + "' has nonzero label " + node.label.str());
      if (!seen.insert(*node.point).second) throw Error(ErrorKind::InvalidTree, "point '" + *node.point + "' appears twice");
      return;
    }
    if (node.point) throw Error(ErrorKind::InvalidTree, "internal node carries point '" + *node.point + "'");
    if (node.children.size() < 2) throw Error(ErrorKind::InvalidTree, "internal node with a single child");
    if (tree.labeled) {
      if (!(node.label > Rational(0))) throw Error(ErrorKind::InvalidTree, "internal node label " + node.label.str() + " is not positive");
      for (const auto& child : node.children)
        if (!(child.label < node.label))
          throw Error(ErrorKind::InvalidTree, "child label " + child.label.str() + " not below parent label " + node.label.str());
    } else if (!node.label.is_zero()) {
      throw Error(ErrorKind::InvalidTree, "unlabeled tree carries label " + node.label.str());
    }
    for (const auto& child : node.children) visit(child);
  };
  visit(tree.root);
}

std::optional<std::size_t> FlatTree::leaf_of(std::string_view point) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].point && *nodes[i].point == point) return i;
  return std::nullopt;
}

std::size_t FlatTree::lca(std::size_t a, std::size_t b) const {
  while (nodes[a].depth > nodes[b].depth) a = *nodes[a].parent;
  while (nodes[b].depth > nodes[a].depth) b = *nodes[b].parent;
  while (a != b) {
    a = *nodes[a].parent;
    b = *nodes[b].parent;
  }
  return a;
}

std::size_t FlatTree::height() const {
  std::size_t h = 0;
  for (const auto& n : nodes) h = std::max(h, n.depth);
  return h;
}

FlatTree flatten(const RepTree& tree) {
  FlatTree out;
  out.labeled = tree.labeled;
  flatten_into(tree.root, std::nullopt, 0, out);
  return out;
}

RepTree unflatten(const FlatTree& flat) { return RepTree{unflatten_node(flat, 0), flat.labeled}; }

namespace {

Rational leaf_distance(const FlatTree& flat, std::size_t a, std::size_t b) {
  if (a == b) return Rational(0);
  const std::size_t top = flat.lca(a, b);
#ifndef NDEBUG
  // Path form: maximum label over the internal nodes on the path.
  Rational path_max(0);
  for (auto v : {a, b})
    for (std::size_t u = *flat.nodes[v].parent;; u = *flat.nodes[u].parent) {
      path_max = std::max(path_max, flat.nodes[u].label);
      if (u == top) break;
    }
  assert(path_max == flat.nodes[top].label);
#endif
  return flat.nodes[top].label;
}

}  // namespace

Rational tree_distance(const RepTree& tree, std::string_view x, std::string_view y) {
  const FlatTree flat = flatten(tree);
  auto a = flat.leaf_of(x);
  if (!a) throw Error(ErrorKind::UnknownPoint, "no leaf '" + std::string(x) + "'");
  auto b = flat.leaf_of(y);
  if (!b) throw Error(ErrorKind::UnknownPoint, "no leaf '" + std::string(y) + "'");
  return leaf_distance(flat, *a, *b);
}

Space space_from_tree(const RepTree& tree) {
  if (!tree.labeled) throw Error(ErrorKind::InvalidTree, "cannot read distances from an unlabeled tree");
  validate_tree(tree);
  const FlatTree flat = flatten(tree);
  std::vector<std::size_t> leaves;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat.nodes[i].is_leaf()) {
      leaves.push_back(i);
      names.push_back(*flat.nodes[i].point);
    }
  const std::size_t n = leaves.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = leaf_distance(flat, leaves[i], leaves[j]);
  return validate_semimetric(std::move(names), std::move(m));
}

RepTree strip_labels(const RepTree& tree) {
  RepTree out = tree;
  out.labeled = false;
  std::function<void(RepNode&)> clear = [&](RepNode& node) {
    node.label = Rational(0);
    for (auto& c : node.children) clear(c);
  };
  clear(out.root);
  return out;
}

std::string shape_string(const RepTree& tree) {
  std::function<std::string(const RepNode&)> render = [&](const RepNode& node) -> std::string {
    if (node.is_leaf()) return "·";
    std::string s = "(";
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      if (i) s += ",";
      s += render(node.children[i]);
    }
    return s + ")";
  };
  return render(tree.root);
}

}  // namespace umtk
