#pragma once

#include <stdexcept>
#include <string>

namespace ktweb {

/// Input sits too close to a stratum boundary for the classification,
/// and hence the moving frame, to be trusted.
struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

/// The potential fails the compatibility condition d(K dV) = 0.
struct Incompatible : std::runtime_error {
  explicit Incompatible(const std::string& what) : std::runtime_error(what) {}
};

/// A polynomial operation would exceed the configured exponent bound.
struct DegreeOverflow : std::runtime_error {
  explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ktweb
