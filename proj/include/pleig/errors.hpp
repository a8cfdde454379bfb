// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pleig {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// invalid arguments, malformed files, out-of-range parameters
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// operation needs a nonzero field (normalization of the zero field etc.)
class DegenerateFieldError : public Error {
public:
  explicit DegenerateFieldError(const std::string& msg) : Error(msg) {}
};

// linear inner solver broke down; carries the iteration count at failure
class SolverError : public Error {
public:
  SolverError(const std::string& msg, int iterations_)
      : Error(msg), iterations(iterations_) {}
  int iterations;
};

// the bipartition iteration lost one of its two nodal domains
class PartitionCollapseError : public Error {
public:
  explicit PartitionCollapseError(const std::string& msg) : Error(msg) {}
};

// thresholding a one-signed vector cannot produce a bipartition
class DegenerateCutError : public Error {
public:
  explicit DegenerateCutError(const std::string& msg) : Error(msg) {}
};

} // namespace pleig
