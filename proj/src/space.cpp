#include "umtk/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace umtk {

namespace {

std::string pair_text(const std::vector<std::string>& pts, std::size_t i, std::size_t j) {
  return "(" + pts[i] + ", " + pts[j] + ")";
}

}  // namespace

std::optional<std::size_t> Space::index_of(std::string_view name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::vector<std::vector<Rational>> Space::matrix() const {
  const std::size_t n = size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = d(i, j);
  return m;
}

Space Space::subspace(std::span<const std::size_t> indices) const {
  Space out;
  const std::size_t m = indices.size();
  out.points_.reserve(m);
  out.dist_.reserve(m * m);
  for (auto i : indices) out.points_.push_back(points_.at(i));
  for (auto i : indices)
    for (auto j : indices) out.dist_.push_back(d(i, j));
  return out;
}

Space Space::reordered(std::span<const std::string> order) const {
  if (order.size() != size()) throw Error(ErrorKind::UnknownPoint, "reorder list has wrong length");
  std::vector<std::size_t> idx;
  idx.reserve(order.size());
  std::vector<bool> seen(size(), false);
  for (const auto& name : order) {
    auto i = index_of(name);
    if (!i) throw Error(ErrorKind::UnknownPoint, "no point named '" + name + "'");
    if (seen[*i]) throw Error(ErrorKind::DuplicatePointName, name);
    seen[*i] = true;
    idx.push_back(*i);
  }
  return subspace(idx);
}

Space Space::renamed(std::vector<std::string> names) const {
  return validate_semimetric(std::move(names), matrix());
}

Space validate_semimetric(std::vector<std::string> points, std::vector<std::vector<Rational>> matrix) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorKind::EmptySpace, "a space needs at least one point");
  if (matrix.size() != n) throw Error(ErrorKind::Parse, "matrix has " + std::to_string(matrix.size()) + " rows for " + std::to_string(n) + " points");
  for (const auto& row : matrix)
    if (row.size() != n) throw Error(ErrorKind::Parse, "matrix is not square");

  std::unordered_set<std::string> names;
  for (const auto& p : points)
    if (!names.insert(p).second) throw Error(ErrorKind::DuplicatePointName, "point '" + p + "' listed twice");

  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero()) throw Error(ErrorKind::NonZeroDiagonal, "d(" + points[i] + ", " + points[i] + ") = " + matrix[i][i].str());
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] != matrix[j][i])
        throw Error(ErrorKind::NonSymmetric, "d" + pair_text(points, i, j) + " = " + matrix[i][j].str() + " but d" + pair_text(points, j, i) + " = " + matrix[j][i].str());
      if (matrix[i][j].is_zero()) throw Error(ErrorKind::ZeroOffDiagonal, "d" + pair_text(points, i, j) + " = 0");
      if (matrix[i][j].is_negative()) throw Error(ErrorKind::NegativeDistance, "d" + pair_text(points, i, j) + " = " + matrix[i][j].str());
    }
  }

  Space out;
  out.points_ = std::move(points);
  out.dist_.reserve(n * n);
  for (auto& row : matrix)
    for (auto& v : row) out.dist_.push_back(std::move(v));
  return out;
}

std::optional<std::size_t> Spectrum::rank_of(const Rational& r) const {
  auto it = std::lower_bound(values.begin(), values.end(), r);
  if (it == values.end() || *it != r) return std::nullopt;
  return static_cast<std::size_t>(it - values.begin());
}

Spectrum spectrum(const Space& space) {
  Spectrum sp;
  sp.values.push_back(Rational(0));
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) sp.values.push_back(space.d(i, j));
  std::sort(sp.values.begin(), sp.values.end());
  sp.values.erase(std::unique(sp.values.begin(), sp.values.end()), sp.values.end());
  return sp;
}

Rational diameter(const Space& space) {
  Rational best(0);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) best = std::max(best, space.d(i, j));
  return best;
}

std::optional<Triple> ultrametric_violation(const Space& space) {
  const std::size_t n = space.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (space.d(x, y) > std::max(space.d(x, z), space.d(z, y))) return Triple{x, y, z};
      }
  return std::nullopt;
}

void check_spectrum_shape(const Spectrum& target) {
  if (target.values.empty() || !target.values.front().is_zero())
    throw Error(ErrorKind::TargetNotStartingAtZero, "target spectrum must start at 0");
  for (std::size_t k = 1; k < target.size(); ++k)
    if (!(target.values[k - 1] < target.values[k]))
      throw Error(ErrorKind::Parse, "target spectrum must be strictly increasing");
}

Space rank_relabel(const Space& space, const Spectrum& target) {
  const Spectrum source = spectrum(space);
  if (source.size() != target.size())
    throw Error(ErrorKind::SpectrumSizeMismatch, "|Sp(X)| = " + std::to_string(source.size()) + " but target has " + std::to_string(target.size()) + " values");
  check_spectrum_shape(target);

  auto m = space.matrix();
  for (auto& row : m)
    for (auto& v : row) v = target.values[*source.rank_of(v)];
  return validate_semimetric(space.points(), std::move(m));
}

}  // namespace umtk
