#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "jgbtda/error.hpp"

namespace jgbtda {

/// Note length in Jeonggan units. Always exact.
using Duration = boost::rational<std::int64_t>;

/// Path-metric values. Sums of many 1/w terms overflow 64-bit denominators, so
/// these are arbitrary precision.
using Exact = boost::multiprecision::cpp_rational;

inline std::string to_string(const Duration& d) {
  if (d.denominator() == 1) return std::to_string(d.numerator());
  return std::to_string(d.numerator()) + "/" + std::to_string(d.denominator());
}

inline std::string to_string(const Exact& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline double to_double(const Exact& x) { return x.convert_to<double>(); }
inline double to_double(const Duration& d) { return boost::rational_cast<double>(d); }

/// Parses "p", "p/q" into a Duration. Throws std::invalid_argument.
inline Duration parse_duration(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Duration(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Duration(parse_int(text.substr(0, slash)), den);
}

/// Shortest decimal that round-trips, always with a fractional part or exponent
/// ("1.0", "1.4142135623730951", "inf").
inline std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

/// Fixed-point rendering used by the SVG writers.
inline std::string format_fixed(double x, int digits = 2) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
  std::string out(buf, res.ptr);
  if (out == "-0.00" || out == "-0.0" || out == "-0") out.erase(0, 1);
  return out;
}

}  // namespace jgbtda
