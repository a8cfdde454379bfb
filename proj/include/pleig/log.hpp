// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <string>

namespace pleig {

// PLEIG_LOG = quiet | info | debug; anything else (or unset) means quiet.
// Logging goes to stderr so reports on stdout stay clean.
enum class LogLevel { quiet = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
  static const LogLevel lvl = [] {
    const char* v = std::getenv("PLEIG_LOG");
    if (!v) return LogLevel::quiet;
    const std::string s(v);
    if (s == "info") return LogLevel::info;
    if (s == "debug") return LogLevel::debug;
    return LogLevel::quiet;
  }();
  return lvl;
}

inline bool log_at_least(LogLevel want) {
  return static_cast<int>(log_level()) >= static_cast<int>(want);
}

} // namespace pleig
