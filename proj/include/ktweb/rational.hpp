#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ktweb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q" or an integer string. Returns nullopt on malformed input.
std::optional<Rat> parse_rational(const std::string& text);

/// Exact conversion of a finite double (doubles are dyadic rationals).
Rat rational_from_double(double value);

double to_double(const Rat& value);

/// "p/q" in lowest terms, or just "p" when the denominator is one.
std::string format_rational(const Rat& value);

/// Exact square root when the value is a perfect rational square (and >= 0).
std::optional<Rat> sqrt_exact(const Rat& value);

}  // namespace ktweb
