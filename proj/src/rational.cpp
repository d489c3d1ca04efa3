#include "ktweb/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace ktweb {

namespace {

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  // cpp_int rejects a leading '+'
  const auto strip = [](const std::string& s) { return s.rfind('+', 0) == 0 ? s.substr(1) : s; };
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_text(text)) return std::nullopt;
    return Rat(Int(strip(text)));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) return std::nullopt;
  Int d(strip(den));
  if (d == 0) return std::nullopt;
  return Rat(Int(strip(num)), d);
}

Rat rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  return Rat(value);
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

std::string format_rational(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rat> sqrt_exact(const Rat& value) {
  if (value < 0) return std::nullopt;
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  const Int rn = boost::multiprecision::sqrt(num);
  const Int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rat(rn, rd);
}

}  // namespace ktweb
