#pragma once

#include "umtk/rep_tree.hpp"
#include "umtk/space.hpp"
#include "umtk/tree_canon.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace umtk {

/// Point bijection X -> Y by index: phi[i] is the index in Y of the image of
/// X's i-th point.
using PointMap = std::vector<std::size_t>;

/// Graph of a scaling function Sp(X) -> Sp(Y), ascending in both columns.
using Scaling = std::vector<std::pair<Rational, Rational>>;

struct IsometryWitness {
  PointMap phi;
};

/// Realization (f, phi) of a weak similarity.
struct WeakSimWitness {
  Scaling scaling;
  PointMap phi;
};

/// The unique strictly increasing bijection Sp(X) -> Sp(Y), which exists iff
/// the spectra have equal size.
std::optional<Scaling> forced_scaling(const Space& x, const Space& y);

bool is_bijection(const PointMap& phi, std::size_t n);

bool verify_isometry(const Space& x, const Space& y, const PointMap& phi);

/// Checks the scaling is a strictly increasing bijection between the spectra
/// with f(0) = 0, and that f(d(a,b)) = rho(phi(a), phi(b)) for every pair.
bool verify_weak_similarity(const Space& x, const Space& y, const WeakSimWitness& w);

/// Isometry via labeled representing trees; both spaces must be ultrametric.
std::optional<IsometryWitness> isometry_by_trees(const Space& x, const Space& y);

/// Isometry via backtracking over point bijections. Candidates for a point
/// must share its sorted distance row; points with the rarest rows go first.
std::optional<IsometryWitness> isometry_by_search(const Space& x, const Space& y);

/// Uses the tree route when both inputs are ultrametric, the search
/// otherwise. The returned witness has been verified.
std::optional<IsometryWitness> decide_isometry(const Space& x, const Space& y);

/// Scaling is forced, so weak similarity reduces to one isometry test of
/// (X, f∘d) against Y.
std::optional<WeakSimWitness> decide_weak_similarity(const Space& x, const Space& y);

/// Same contract as decide_weak_similarity, computed only through labeled
/// canonical codes of the representing trees. Throws NotUltrametric.
std::optional<WeakSimWitness> weak_sim_ultrametric_fast(const Space& x, const Space& y);

/// Leaf-point bijection induced by a node map between representing trees of
/// x and y.
PointMap leaf_point_map(const FlatTree& tx, const FlatTree& ty, const NodeMap& map, const Space& x, const Space& y);

/// Tree with every label replaced by its image under `scaling`.
RepTree apply_scaling(const RepTree& tree, const Scaling& scaling);

WeakSimWitness identity_witness(const Space& x);
WeakSimWitness inverse(const WeakSimWitness& w);
/// Realization of X -> Z from realizations X -> Y and Y -> Z.
WeakSimWitness compose(const WeakSimWitness& xy, const WeakSimWitness& yz);

}  // namespace umtk
