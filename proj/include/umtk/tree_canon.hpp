#pragma once

#include "umtk/rep_tree.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace umtk {

/// AHU-style canonical string of a rooted tree. Equal codes mean isomorphic
/// trees (label-preserving for the labeled variant).
struct CanonCode {
  std::string code;

  friend bool operator==(const CanonCode&, const CanonCode&) = default;
  friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
};

CanonCode canon_code_unlabeled(const RepTree& tree);
CanonCode canon_code_labeled(const RepTree& tree);

CanonCode canon_code_unlabeled(const FlatTree& tree);
CanonCode canon_code_labeled(const FlatTree& tree);

/// Canonical code of every subtree, indexed by preorder position.
std::vector<std::string> subtree_codes(const FlatTree& tree, bool with_labels);

/// Node bijection between two trees given as preorder indices:
/// map[i] is the image in the second tree of node i of the first.
using NodeMap = std::vector<std::size_t>;

std::optional<NodeMap> rooted_tree_iso_map(const FlatTree& a, const FlatTree& b, bool respect_labels);
std::optional<NodeMap> rooted_tree_iso_map(const RepTree& a, const RepTree& b, bool respect_labels);

/// Independent check of a node map: bijective, root to root, parent
/// relation preserved in both directions, labels preserved when asked.
bool verify_tree_iso(const FlatTree& a, const FlatTree& b, const NodeMap& map, bool respect_labels);

}  // namespace umtk
