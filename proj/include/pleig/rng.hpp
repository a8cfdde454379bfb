// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace pleig {

// explicit 53-bit mapping; std::uniform_real_distribution is
// implementation-defined and would break cross-build reproducibility
inline double uniform01(std::mt19937& gen) {
  std::uint64_t a = gen() >> 5;
  std::uint64_t b = gen() >> 6;
  return (static_cast<double>(a) * 67108864.0 + static_cast<double>(b)) *
         (1.0 / 9007199254740992.0);
}

} // namespace pleig
