// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <string>

namespace pleig {

// fixed 17-significant-digit formatting shared by the CSV and JSON writers;
// 17 digits round-trip any double exactly
inline std::string format_sig17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf);
}

} // namespace pleig
