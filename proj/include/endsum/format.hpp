#pragma once

#include <cstdio>
#include <string>

namespace endsum {

// Fixed six-decimal rendering used by every machine-readable output.
inline std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace endsum
