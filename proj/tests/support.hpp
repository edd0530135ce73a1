#pragma once

#include "doctest.h"
#include "fixtures.hpp"
#include "umtk/error.hpp"
#include "umtk/generators.hpp"

#include <cstdint>
#include <optional>

// Kind of the umtk::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<umtk::ErrorKind> kind_of(F&& f) {
  try {
    f();
  } catch (const umtk::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

#define CHECK_KIND(expr, k) CHECK(kind_of([&] { (void)(expr); }) == std::optional<umtk::ErrorKind>(k))

namespace fx {

inline Space random_ultra(std::uint64_t seed, std::size_t n, umtk::ShapeClass shape = umtk::ShapeClass::Any,
                          std::vector<Rational> pool = {}, bool injective = false) {
  umtk::GenConfig c;
  c.seed = seed;
  c.n = n;
  c.shape = shape;
  c.pool = std::move(pool);
  c.injective = injective;
  return umtk::random_ultrametric(c);
}

inline Space random_semi(std::uint64_t seed, std::size_t n, std::vector<Rational> pool = {}) {
  umtk::GenConfig c;
  c.seed = seed;
  c.n = n;
  c.pool = std::move(pool);
  c.semimetric = true;
  return umtk::random_semimetric(c);
}

inline const std::vector<Rational>& pool123() {
  static const std::vector<Rational> p{Rational(1), Rational(2), Rational(3)};
  return p;
}

}  // namespace fx
