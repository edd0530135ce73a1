#pragma once

#include "umtk/ballean.hpp"
#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/space.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace umtk {

using Rng = std::mt19937_64;

enum class ShapeClass {
  Any,     // recursive random partition
  R,       // strictly binary chain
  RTilde,  // one inner node per level
  T,       // chain above a fan of equal-size inner nodes
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n = 5;
  /// Allowed distance values. Empty means small random integers for trees
  /// and {1, 2, 3} for semimetric matrices.
  std::vector<Rational> pool;
  ShapeClass shape = ShapeClass::Any;
  /// Pairwise distinct inner labels (class D).
  bool injective = false;
  bool semimetric = false;
  std::string prefix = "x";
};

/// Parses "any", "R", "Rtilde", "D" or "T" into shape/injective settings.
void apply_class_name(GenConfig& config, std::string_view name);

/// Unlabeled tree with n leaves named prefix1..prefixN in random positions.
RepTree random_shape(Rng& rng, std::size_t n, ShapeClass shape, const std::string& prefix);

/// Valid labeling of a shape: labels strictly decrease towards the leaves.
/// Throws InfeasibleConstraints when the pool runs out.
RepTree random_labeling(Rng& rng, const RepTree& shape, const std::vector<Rational>& pool, bool injective);

/// Always ultrametric; generated through a random representing tree.
Space random_ultrametric(const GenConfig& config);

/// Symmetric, zero diagonal, off-diagonal entries drawn from the pool.
Space random_semimetric(const GenConfig& config);

Space generate(const GenConfig& config);

/// Copy of `space` with shuffled point order and names prefix1..prefixN.
Space shuffled_copy(Rng& rng, const Space& space, const std::string& prefix);

/// Strictly increasing spectrum of the given size starting at 0.
Spectrum random_spectrum(Rng& rng, std::size_t size);

// Exhaustive oracles. They share nothing with the fast decision procedures
// beyond the Space type and the ball checker.

inline constexpr std::size_t kOracleIsometryLimit = 8;
inline constexpr std::size_t kOracleBallLimit = 6;

/// Tries every bijection. Throws TooLarge above kOracleIsometryLimit points.
std::optional<IsometryWitness> oracle_isometry(const Space& x, const Space& y);

/// Rank map of the spectra, then every bijection.
std::optional<WeakSimWitness> oracle_weak_similarity(const Space& x, const Space& y);

/// Every bijection through verify_ball_preserving. Throws TooLarge above
/// kOracleBallLimit points.
std::optional<PointMap> oracle_ball_preserving(const Space& x, const Space& y);

}  // namespace umtk
