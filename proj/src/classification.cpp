#include "umtk/classification.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace umtk {

namespace {

std::vector<std::size_t> inner_nodes(const FlatTree& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.nodes[i].is_leaf()) out.push_back(i);
  return out;
}

std::vector<std::size_t> inner_by_label_desc(const FlatTree& t) {
  auto inner = inner_nodes(t);
  std::stable_sort(inner.begin(), inner.end(),
                   [&](std::size_t a, std::size_t b) { return t.nodes[a].label > t.nodes[b].label; });
  return inner;
}

ClassReport classify_flat(const FlatTree& t) {
  ClassReport r;
  const std::size_t height = t.height();
  r.levels.assign(height + 1, 0);
  for (const auto& node : t.nodes)
    if (!node.is_leaf()) ++r.levels[node.depth];

  r.in_R_tilde = true;
  for (std::size_t k = 0; k < height; ++k) r.in_R_tilde = r.in_R_tilde && r.levels[k] == 1;

  r.in_R = r.in_R_tilde;
  for (const auto& node : t.nodes)
    if (!node.is_leaf() && node.children.size() != 2) r.in_R = false;

  for (auto i : inner_by_label_desc(t)) r.label_multiset.push_back(t.nodes[i].label);
  r.in_D = std::adjacent_find(r.label_multiset.begin(), r.label_multiset.end()) == r.label_multiset.end();

  bool cond_a = true;
  for (std::size_t k = 0; k + 1 < height; ++k) cond_a = cond_a && r.levels[k] == 1;
  bool cond_b = true;
  if (height >= 1) {
    std::optional<std::size_t> fanout;
    for (const auto& node : t.nodes) {
      if (node.is_leaf() || node.depth != height - 1) continue;
      if (fanout && *fanout != node.children.size()) cond_b = false;
      fanout = node.children.size();
    }
  }
  r.in_T = cond_a && cond_b;
  return r;
}

void require_ultrametric(const Space& s) {
  if (auto bad = ultrametric_violation(s))
    throw Error(ErrorKind::NotUltrametric, "violating triple (" + s.point(bad->x) + ", " + s.point(bad->y) + ", " + s.point(bad->z) + ")");
}

Scaling scaling_from_pairs(std::vector<std::pair<Rational, Rational>> pairs) {
  pairs.emplace_back(Rational(0), Rational(0));
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

WeakSimWitness checked(const Space& x, const Space& y, WeakSimWitness w, const char* route) {
  if (!verify_weak_similarity(x, y, w))
    throw Error(ErrorKind::VerificationFailed, std::string(route) + " construction produced a non-witness");
  return w;
}

// Inner nodes paired by decreasing label; Psi supplies the leaves.
WeakSimWitness from_chain(const Space& x, const Space& y, const FlatTree& tx, const FlatTree& ty) {
  auto psi = rooted_tree_iso_map(tx, ty, false);
  if (!psi) throw Error(ErrorKind::VerificationFailed, "shape codes agree but no shape isomorphism was found");
  auto lx = inner_by_label_desc(tx);
  auto ly = inner_by_label_desc(ty);
  std::vector<std::pair<Rational, Rational>> pairs;
  for (std::size_t i = 0; i < lx.size(); ++i) pairs.emplace_back(tx.nodes[lx[i]].label, ty.nodes[ly[i]].label);
  return checked(x, y, {scaling_from_pairs(std::move(pairs)), leaf_point_map(tx, ty, *psi, x, y)}, "label-chain");
}

// Inner nodes paired by label rank, extended to leaves child by child.
WeakSimWitness from_rank_pairing(const Space& x, const Space& y, const FlatTree& tx, const FlatTree& ty) {
  auto lx = inner_by_label_desc(tx);
  auto ly = inner_by_label_desc(ty);
  if (lx.size() != ly.size()) throw Error(ErrorKind::VerificationFailed, "inner node counts differ");

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  NodeMap map(tx.size(), unset);
  for (std::size_t i = 0; i < lx.size(); ++i) map[lx[i]] = ly[i];
  for (std::size_t i = 0; i < lx.size(); ++i) {
    std::vector<std::size_t> leaves_x, leaves_y;
    for (auto c : tx.nodes[lx[i]].children)
      if (tx.nodes[c].is_leaf()) leaves_x.push_back(c);
    for (auto c : ty.nodes[ly[i]].children)
      if (ty.nodes[c].is_leaf()) leaves_y.push_back(c);
    if (leaves_x.size() != leaves_y.size())
      throw Error(ErrorKind::VerificationFailed, "rank pairing does not extend: leaf counts differ");
    for (std::size_t k = 0; k < leaves_x.size(); ++k) map[leaves_x[k]] = leaves_y[k];
  }
  if (!verify_tree_iso(tx, ty, map, false))
    throw Error(ErrorKind::VerificationFailed, "rank pairing does not extend to a tree isomorphism");

  std::vector<std::pair<Rational, Rational>> pairs;
  for (std::size_t i = 0; i < lx.size(); ++i) pairs.emplace_back(tx.nodes[lx[i]].label, ty.nodes[ly[i]].label);
  return checked(x, y, {scaling_from_pairs(std::move(pairs)), leaf_point_map(tx, ty, map, x, y)}, "rank-pairing");
}

std::size_t spectrum_size_of_labels(const FlatTree& t, const std::vector<Rational>& labels) {
  std::set<Rational> distinct;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.nodes[i].is_leaf()) distinct.insert(labels[i]);
  return distinct.size() + 1;
}

bool valid_labels(const FlatTree& t, const std::vector<Rational>& labels) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.nodes[i].is_leaf()) continue;
    if (!(labels[i] > Rational(0))) return false;
    for (auto c : t.nodes[i].children)
      if (!t.nodes[c].is_leaf() && !(labels[c] < labels[i])) return false;
  }
  return true;
}

Space space_with_labels(const Space& x, FlatTree t, const std::vector<Rational>& labels) {
  for (std::size_t i = 0; i < t.size(); ++i) t.nodes[i].label = labels[i];
  return space_from_tree(unflatten(t)).reordered(x.points());
}

}  // namespace

std::string_view to_string(ShapeWitnessStatus status) {
  switch (status) {
    case ShapeWitnessStatus::Witness: return "Witness";
    case ShapeWitnessStatus::Inapplicable: return "Inapplicable";
    case ShapeWitnessStatus::NotIsomorphicShapes: return "NotIsomorphicShapes";
  }
  return "Unknown";
}

ClassReport classify_tree(const RepTree& tree) { return classify_flat(flatten(tree)); }

ClassReport classify_space(const Space& space) {
  require_ultrametric(space);
  return classify_tree(build_tree(space));
}

ShapeWitnessResult witness_from_unlabeled_iso(const Space& x, const Space& y) {
  require_ultrametric(x);
  require_ultrametric(y);
  const FlatTree tx = flatten(build_tree(x));
  const FlatTree ty = flatten(build_tree(y));
  if (canon_code_unlabeled(tx) != canon_code_unlabeled(ty)) return {ShapeWitnessStatus::NotIsomorphicShapes, std::nullopt};

  const ClassReport cx = classify_flat(tx);
  if (cx.in_R_tilde) return {ShapeWitnessStatus::Witness, from_chain(x, y, tx, ty)};
  if (cx.in_D && cx.in_T && classify_flat(ty).in_D)
    return {ShapeWitnessStatus::Witness, from_rank_pairing(x, y, tx, ty)};
  return {ShapeWitnessStatus::Inapplicable, std::nullopt};
}

std::optional<Space> adversarial_relabeling(const Space& x) {
  require_ultrametric(x);
  const FlatTree t = flatten(build_tree(x));
  if (classify_flat(t).in_R_tilde) return std::nullopt;

  std::vector<Rational> base(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) base[i] = t.nodes[i].label;
  const std::size_t target = spectrum_size_of_labels(t, base);
  const Spectrum sp = spectrum(x);

  // Copy labels, reassigning the second node x2 of a same-level inner pair:
  // it takes x1's label when the two differ, otherwise a fresh value just
  // above its own label.
  const std::size_t height = t.height();
  for (std::size_t level = 0; level < height; ++level) {
    std::vector<std::size_t> same;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!t.nodes[i].is_leaf() && t.nodes[i].depth == level) same.push_back(i);
    for (auto x1 : same)
      for (auto x2 : same) {
        if (x1 == x2) continue;
        std::vector<Rational> labels = base;
        if (base[x1] != base[x2]) {
          labels[x2] = base[x1];
        } else {
          const auto next = std::upper_bound(sp.values.begin(), sp.values.end(), base[x2]);
          // x2 has a parent (it shares a level with x1), whose label lies in Sp.
          labels[x2] = midpoint(base[x2], *next);
        }
        if (valid_labels(t, labels) && spectrum_size_of_labels(t, labels) != target)
          return space_with_labels(x, t, labels);
      }
  }

  // No single reassignment changes |Sp|. Relabel globally: labeling by depth
  // uses one value per inner level, an injective labeling one per inner node;
  // the two counts differ because some level holds two inner nodes.
  std::vector<Rational> by_depth(t.size()), injective(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.nodes[i].is_leaf()) continue;
    by_depth[i] = Rational(static_cast<std::int64_t>(height - t.nodes[i].depth));
    injective[i] = Rational(static_cast<std::int64_t>(t.size() - i));
  }
  if (spectrum_size_of_labels(t, by_depth) != target) return space_with_labels(x, t, by_depth);
  return space_with_labels(x, t, injective);
}

}  // namespace umtk
