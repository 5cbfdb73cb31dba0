#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace ergm {

// Locale-independent decimal rendering used for every CSV cell and table.
inline std::string format_real(double x, int digits = 12) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace ergm
