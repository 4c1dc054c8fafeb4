// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace carpetlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of budget; carries the worst per-panel
// error estimate seen at the point of failure.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double worst_estimate)
      : std::runtime_error(what), worst_estimate_(worst_estimate) {}

  double worst_estimate() const noexcept { return worst_estimate_; }

 private:
  double worst_estimate_;
};

}  // namespace carpetlab
