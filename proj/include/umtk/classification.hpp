#pragma once

#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/space.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace umtk {

/// Membership of an ultrametric space in the tree-structural classes.
///
/// Levels are numbered from the root (level 0); `height` is the greatest leaf
/// depth. R~ requires exactly one inner node on every level above `height`.
/// R additionally requires every inner node to have two children. D asks for
/// pairwise distinct inner labels. T asks for one inner node on each level
/// below height - 1 (condition A) and equal child counts among the inner
/// nodes on level height - 1 (condition B).
struct ClassReport {
  bool in_R = false;
  bool in_R_tilde = false;
  bool in_D = false;
  bool in_T = false;
  /// Inner-node count per level, levels 0..height.
  std::vector<std::size_t> levels;
  /// Inner labels, descending.
  std::vector<Rational> label_multiset;
};

ClassReport classify_tree(const RepTree& tree);

/// Throws NotUltrametric.
ClassReport classify_space(const Space& space);

enum class ShapeWitnessStatus { Witness, Inapplicable, NotIsomorphicShapes };

std::string_view to_string(ShapeWitnessStatus status);

struct ShapeWitnessResult {
  ShapeWitnessStatus status = ShapeWitnessStatus::Inapplicable;
  std::optional<WeakSimWitness> witness;
};

/// Builds a weak similarity X -> Y from an isomorphism of the unlabeled
/// representing trees when X's class guarantees one:
///  - X in R~: inner labels of both trees are paired in decreasing order and
///    the shape isomorphism supplies the points;
///  - X in D∩T, Y in D: inner nodes are paired by label rank and the pairing
///    is extended to leaves.
/// Otherwise Inapplicable. Throws NotUltrametric, or VerificationFailed if a
/// construction produces a non-witness.
ShapeWitnessResult witness_from_unlabeled_iso(const Space& x, const Space& y);

/// Ultrametric Y on X's points with the same unlabeled tree as X but
/// |Sp(Y)| != |Sp(X)|, so Y is not weakly similar to X. Needs two inner
/// nodes on one level; returns nullopt (inapplicable) for X in R~.
/// Throws NotUltrametric.
std::optional<Space> adversarial_relabeling(const Space& x);

}  // namespace umtk
