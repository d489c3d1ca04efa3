#include "ktweb/format.hpp"

#include <cstdio>

namespace ktweb {

std::string fmt_double_sig(double v, int digits) {
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

}  // namespace ktweb
