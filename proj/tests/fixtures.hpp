#pragma once

#include "umtk/space.hpp"

#include <string>
#include <vector>

namespace fx {

using umtk::Rational;
using umtk::Space;

// Matrix entries as strings, so "7/3" style values read naturally.
inline Space space(std::vector<std::string> points, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(Rational::parse(v));
    m.push_back(std::move(r));
  }
  return umtk::validate_semimetric(std::move(points), std::move(m));
}

inline Space one() { return space({"x"}, {{"0"}}); }
inline Space two(const std::string& d = "5") { return space({"u", "v"}, {{"0", d}, {d, "0"}}); }

// p far from the close pair q, r.
inline Space X3() { return space({"p", "q", "r"}, {{"0", "2", "2"}, {"2", "0", "1"}, {"2", "1", "0"}}); }

// Not ultrametric: 3 > max(1, 1).
inline Space S3() { return space({"a", "b", "c"}, {{"0", "1", "3"}, {"1", "0", "1"}, {"3", "1", "0"}}); }

// S3 with the long side elsewhere.
inline Space S3b() { return space({"u", "v", "w"}, {{"0", "3", "1"}, {"3", "0", "1"}, {"1", "1", "0"}}); }

// {a,b} at 1, {c,d} at 2, cross pairs at 3.
inline Space X4() {
  return space({"a", "b", "c", "d"},
               {{"0", "1", "3", "3"}, {"1", "0", "3", "3"}, {"3", "3", "0", "2"}, {"3", "3", "2", "0"}});
}

// X4 with the two inner distances swapped.
inline Space X4swap() {
  return space({"a", "b", "c", "d"},
               {{"0", "2", "3", "3"}, {"2", "0", "3", "3"}, {"3", "3", "0", "1"}, {"3", "3", "1", "0"}});
}

// {a,b} at 1, {c,d,e} at 2, cross pairs at 3.
inline Space X5() {
  return space({"a", "b", "c", "d", "e"}, {{"0", "1", "3", "3", "3"},
                                           {"1", "0", "3", "3", "3"},
                                           {"3", "3", "0", "2", "2"},
                                           {"3", "3", "2", "0", "2"},
                                           {"3", "3", "2", "2", "0"}});
}

inline Space Y3() { return umtk::rank_relabel(X3(), umtk::Spectrum{{Rational(0), Rational(10), Rational(20)}}); }

}  // namespace fx
