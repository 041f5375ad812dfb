#pragma once

#include <boost/rational.hpp>

#include <chrono>
#include <cstdint>
#include <string_view>

namespace ssdsim {

/// Simulated time. All model arithmetic is done on integer picoseconds.
using Picoseconds = std::chrono::duration<std::int64_t, std::pico>;

/// Exact fraction used for dimensionless factors (alpha) and for
/// intermediate timing results before they are rounded to picoseconds.
using Fraction = boost::rational<std::int64_t>;

constexpr double kBytesPerMB = 1e6;

inline constexpr Picoseconds ns(std::int64_t v) { return Picoseconds{v * 1000}; }
inline constexpr Picoseconds us(std::int64_t v) { return Picoseconds{v * 1000000}; }

inline double to_ns(Picoseconds t) { return static_cast<double>(t.count()) / 1e3; }
inline double to_seconds(Picoseconds t) { return static_cast<double>(t.count()) / 1e12; }

/// Rounds a non-negative exact value (in picoseconds) to the nearest
/// picosecond, halves away from zero.
Picoseconds round_picos(const Fraction& ps);

/// Parses a decimal literal such as "7.82" or "20" (nanoseconds) into exact
/// picoseconds. More than three fractional digits is an error.
Picoseconds parse_ns(std::string_view text);

/// Parses a decimal literal into an exact fraction ("0.5" -> 1/2).
Fraction parse_fraction(std::string_view text);

double to_double(const Fraction& f);

}  // namespace ssdsim
