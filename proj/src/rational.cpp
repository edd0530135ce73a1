#include "umtk/rational.hpp"

#include "umtk/error.hpp"

#include <cctype>
#include <stdexcept>

namespace umtk {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
  cpp_int out = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::Parse, "malformed rational '" + std::string(whole) + "'");
    out = out * 10 + (c - '0');
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = value_type(cpp_int(num), cpp_int(den));
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  cpp_int num;
  cpp_int den = 1;
  if (auto slash = body.find('/'); slash == std::string_view::npos) {
    num = parse_integer(body, text);
  } else {
    num = parse_integer(body.substr(0, slash), text);
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(value_type(num, den));
}

std::string Rational::str() const {
  auto den = boost::multiprecision::denominator(value_);
  auto num = boost::multiprecision::numerator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string Rational::numerator() const { return boost::multiprecision::numerator(value_).str(); }
std::string Rational::denominator() const { return boost::multiprecision::denominator(value_).str(); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational(a.value_ / b.value_);
}

}  // namespace umtk
