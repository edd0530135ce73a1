#pragma once

#include "umtk/error.hpp"
#include "umtk/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace umtk {

/// Finite semimetric space: named points and an exact, symmetric distance
/// matrix with zero diagonal and positive off-diagonal entries.
///
/// Instances are only produced through validate_semimetric() (or helpers that
/// call it), so every Space in circulation satisfies the axioms. The triangle
/// inequality is not required; see is_ultrametric() for the strong form.
class Space {
 public:
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point(std::size_t i) const { return points_[i]; }

  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i * points_.size() + j]; }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Row-major copy of the distance matrix.
  std::vector<std::vector<Rational>> matrix() const;

  /// Subspace on the given point indices, in that order.
  Space subspace(std::span<const std::size_t> indices) const;

  /// Same space with points listed in `order` (a permutation of the names).
  Space reordered(std::span<const std::string> order) const;

  /// Same distances with the points renamed positionally.
  Space renamed(std::vector<std::string> names) const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  friend Space validate_semimetric(std::vector<std::string>, std::vector<std::vector<Rational>>);
  Space() = default;

  std::vector<std::string> points_;
  std::vector<Rational> dist_;
};

/// Checks the semimetric axioms and builds a Space.
/// Throws Error with kind EmptySpace, DuplicatePointName, NonSymmetric,
/// NonZeroDiagonal, ZeroOffDiagonal or NegativeDistance.
Space validate_semimetric(std::vector<std::string> points, std::vector<std::vector<Rational>> matrix);

/// Distance set of a space, ascending, deduplicated, always starting at 0.
struct Spectrum {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  /// Position of `r` in the spectrum, if present.
  std::optional<std::size_t> rank_of(const Rational& r) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum spectrum(const Space& space);

Rational diameter(const Space& space);

/// Indices (x, y, z) with d(x,y) > max{d(x,z), d(z,y)}.
struct Triple {
  std::size_t x;
  std::size_t y;
  std::size_t z;
};

/// First violation of the strong triangle inequality, scanning x < y then z.
std::optional<Triple> ultrametric_violation(const Space& space);

inline bool is_ultrametric(const Space& space) { return !ultrametric_violation(space).has_value(); }

/// Validates `target` as a spectrum: strictly increasing, first element 0.
/// Throws TargetNotStartingAtZero, or Parse for a non-increasing list.
void check_spectrum_shape(const Spectrum& target);

/// (X, f∘d) where f is the rank map Sp(X) -> target.
/// Throws SpectrumSizeMismatch or TargetNotStartingAtZero.
Space rank_relabel(const Space& space, const Spectrum& target);

}  // namespace umtk
