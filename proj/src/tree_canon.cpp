#include "umtk/tree_canon.hpp"

#include <algorithm>
#include <map>

namespace umtk {

std::vector<std::string> subtree_codes(const FlatTree& tree, bool with_labels) {
  std::vector<std::string> codes(tree.size());
  // Preorder puts every child after its parent, so a reverse sweep is bottom-up.
  for (std::size_t i = tree.size(); i-- > 0;) {
    const auto& node = tree.nodes[i];
    if (node.is_leaf()) {
      codes[i] = "()";
      continue;
    }
    std::vector<const std::string*> kids;
    kids.reserve(node.children.size());
    for (auto c : node.children) kids.push_back(&codes[c]);
    std::sort(kids.begin(), kids.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string code = "(";
    if (with_labels) code += node.label.str() + ":";
    for (const auto* k : kids) code += *k;
    code += ")";
    codes[i] = std::move(code);
  }
  return codes;
}

CanonCode canon_code_unlabeled(const FlatTree& tree) { return {subtree_codes(tree, false).front()}; }
CanonCode canon_code_labeled(const FlatTree& tree) { return {subtree_codes(tree, true).front()}; }
CanonCode canon_code_unlabeled(const RepTree& tree) { return canon_code_unlabeled(flatten(tree)); }
CanonCode canon_code_labeled(const RepTree& tree) { return canon_code_labeled(flatten(tree)); }

std::optional<NodeMap> rooted_tree_iso_map(const FlatTree& a, const FlatTree& b, bool respect_labels) {
  if (a.size() != b.size()) return std::nullopt;
  const auto codes_a = subtree_codes(a, respect_labels);
  const auto codes_b = subtree_codes(b, respect_labels);
  if (codes_a.front() != codes_b.front()) return std::nullopt;

  NodeMap map(a.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> work{{0, 0}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    map[u] = v;
    // Equal-code siblings are paired in child order.
    std::map<std::string_view, std::vector<std::size_t>> pending;
    for (auto c : b.nodes[v].children) pending[codes_b[c]].push_back(c);
    std::map<std::string_view, std::size_t> used;
    for (auto c : a.nodes[u].children) {
      auto& bucket = pending[codes_a[c]];
      auto& k = used[codes_a[c]];
      work.emplace_back(c, bucket[k++]);
    }
  }
  return map;
}

std::optional<NodeMap> rooted_tree_iso_map(const RepTree& a, const RepTree& b, bool respect_labels) {
  return rooted_tree_iso_map(flatten(a), flatten(b), respect_labels);
}

bool verify_tree_iso(const FlatTree& a, const FlatTree& b, const NodeMap& map, bool respect_labels) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto v : map) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  if (map[0] != 0) return false;
  for (std::size_t u = 0; u < a.size(); ++u) {
    // Edges are parent links; preserving every parent link of a bijection
    // between equal-size trees preserves the edge set in both directions.
    const auto& pu = a.nodes[u].parent;
    const auto& pv = b.nodes[map[u]].parent;
    if (pu.has_value() != pv.has_value()) return false;
    if (pu && map[*pu] != *pv) return false;
    if (respect_labels && a.nodes[u].label != b.nodes[map[u]].label) return false;
  }
  return true;
}

}  // namespace umtk
