#pragma once

// Slow reference implementations used only by the tests. They work from the
// raw distance matrix and share no code with the library beyond Space.

#include "umtk/space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace ref {

using umtk::Rational;
using umtk::Space;
using Perm = std::vector<std::size_t>;

inline bool ultrametric(const Space& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (x.d(i, j) > std::max(x.d(i, k), x.d(k, j))) return false;
  return true;
}

inline std::vector<Rational> values(const Space& x) {
  std::set<Rational> s;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s.insert(x.d(i, j));
  return {s.begin(), s.end()};
}

template <class F>
std::optional<Perm> first_perm(std::size_t n, F&& ok) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (ok(p)) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline bool isometric_under(const Space& x, const Space& y, const Perm& p) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x.d(i, j) != y.d(p[i], p[j])) return false;
  return true;
}

inline std::optional<Perm> isometry(const Space& x, const Space& y) {
  if (x.size() != y.size()) return std::nullopt;
  return first_perm(x.size(), [&](const Perm& p) { return isometric_under(x, y, p); });
}

// Weak similarity straight from the definition: the induced value map must be
// a well-defined, strictly increasing bijection between the distance sets.
inline bool weakly_similar_under(const Space& x, const Space& y, const Perm& p) {
  std::map<Rational, Rational> f;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      auto [it, fresh] = f.emplace(x.d(i, j), y.d(p[i], p[j]));
      if (!fresh && it->second != y.d(p[i], p[j])) return false;
    }
  std::set<Rational> image;
  const Rational* prev = nullptr;
  for (const auto& [a, b] : f) {
    if (prev && !(*prev < b)) return false;
    prev = &b;
    image.insert(b);
  }
  return image.size() == values(y).size();
}

inline std::optional<Perm> weak_similarity(const Space& x, const Space& y) {
  if (x.size() != y.size()) return std::nullopt;
  return first_perm(x.size(), [&](const Perm& p) { return weakly_similar_under(x, y, p); });
}

// Every closed ball, for every centre and every radius in the distance set.
inline std::set<std::set<std::size_t>> balls(const Space& x) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t t = 0; t < x.size(); ++t)
    for (const auto& r : values(x)) {
      std::set<std::size_t> b;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x.d(i, t) <= r) b.insert(i);
      out.insert(b);
    }
  return out;
}

using Family = std::set<std::set<std::size_t>>;

inline bool ball_preserving_under(const Family& bx, const Family& by, const Perm& p) {
  Family image;
  for (const auto& b : bx) {
    std::set<std::size_t> m;
    for (auto i : b) m.insert(p[i]);
    if (!by.count(m)) return false;
    image.insert(m);
  }
  return image == by;
}

inline bool ball_preserving_under(const Space& x, const Space& y, const Perm& p) {
  return ball_preserving_under(balls(x), balls(y), p);
}

inline std::optional<Perm> ball_preserving(const Space& x, const Space& y) {
  if (x.size() != y.size()) return std::nullopt;
  const Family bx = balls(x);
  const Family by = balls(y);
  if (bx.size() != by.size()) return std::nullopt;
  return first_perm(x.size(), [&](const Perm& p) { return ball_preserving_under(bx, by, p); });
}

// Cover pairs of the inclusion order on a family of sets.
inline std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> covers(
    const std::set<std::set<std::size_t>>& family) {
  auto sub = [](const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> out;
  for (const auto& a : family)
    for (const auto& b : family) {
      if (!sub(a, b)) continue;
      bool direct = true;
      for (const auto& c : family)
        if (sub(a, c) && sub(c, b)) direct = false;
      if (direct) out.insert({a, b});
    }
  return out;
}

}  // namespace ref
