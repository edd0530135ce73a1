#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace umtk {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Distances and tree labels are compared for exact equality throughout the
/// library, so no floating-point conversion is offered.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "a" or "a/b" (b > 0, optional leading '-'). Throws Error(Parse).
  static Rational parse(std::string_view text);

  /// "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;

  std::string numerator() const;
  std::string denominator() const;

  bool is_zero() const { return value_ == 0; }
  bool is_negative() const { return value_ < 0; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  std::size_t hash() const { return std::hash<std::string>{}(str()); }

 private:
  explicit Rational(value_type v) : value_(std::move(v)) {}

  value_type value_{0};
};

/// Midpoint of two rationals; used where a fresh value strictly between two
/// labels is required.
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace umtk

template <>
struct std::hash<umtk::Rational> {
  std::size_t operator()(const umtk::Rational& r) const { return r.hash(); }
};
