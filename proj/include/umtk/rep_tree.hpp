#pragma once

#include "umtk/space.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umtk {

/// Node of a representing tree. Leaves carry a point and label 0; internal
/// nodes carry the diameter of the subspace below them.
struct RepNode {
  Rational label;
  std::vector<RepNode> children;
  std::optional<std::string> point;

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const RepNode&, const RepNode&) = default;
};

/// Rooted tree with optional labels. When `labeled` is false every label is
/// 0 and only the shape and leaf points are meaningful.
struct RepTree {
  RepNode root;
  bool labeled = true;

  friend bool operator==(const RepTree&, const RepTree&) = default;
};

/// Representing tree of an ultrametric space. Children are ordered by the
/// labeled canonical code of their subtree, ties broken by smallest point.
/// Throws NotUltrametric carrying the violating triple.
RepTree build_tree(const Space& space);

/// Throws InvalidTree on any structural breach: leaf/label/point mismatch,
/// an internal node with fewer than two children, non-decreasing labels
/// towards the root, or duplicate points.
void validate_tree(const RepTree& tree);

/// d(x, y) read off the tree: the label of the lowest common ancestor of
/// the two leaves. Throws UnknownPoint.
Rational tree_distance(const RepTree& tree, std::string_view x, std::string_view y);

/// Ultrametric space on the leaf points (in preorder) with d = tree_distance.
/// Validates the tree first.
Space space_from_tree(const RepTree& tree);

RepTree strip_labels(const RepTree& tree);

/// Parenthesised shape, e.g. "(·,(·,·))" for a root over a leaf and a cherry.
std::string shape_string(const RepTree& tree);

/// Preorder array view of a tree; node 0 is the root.
struct FlatNode {
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  Rational label;
  std::optional<std::string> point;
  std::size_t depth = 0;

  bool is_leaf() const { return children.empty(); }
};

struct FlatTree {
  std::vector<FlatNode> nodes;
  bool labeled = true;

  std::size_t size() const { return nodes.size(); }
  std::optional<std::size_t> leaf_of(std::string_view point) const;
  /// Lowest common ancestor of nodes a and b.
  std::size_t lca(std::size_t a, std::size_t b) const;
  /// Greatest depth of any node (0 for a single node).
  std::size_t height() const;
};

FlatTree flatten(const RepTree& tree);
RepTree unflatten(const FlatTree& flat);

}  // namespace umtk
