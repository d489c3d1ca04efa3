#pragma once

#include <string>

namespace ktweb {

/// Shortest deterministic decimal with the given significant digits
/// (printf %.*g); negative zero collapses to "0".
std::string fmt_double_sig(double v, int digits);

/// 17 significant digits -- round-trip exact for doubles.
inline std::string fmt_double(double v) { return fmt_double_sig(v, 17); }

}  // namespace ktweb
