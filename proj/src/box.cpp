// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/box.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "carpetlab/numerics.hpp"

namespace carpetlab {

double revival_time(double mass, double length, double hbar) {
  if (!(mass > 0.0) || !(length > 0.0) || !(hbar > 0.0))
    throw std::domain_error("revival_time: mass, length, hbar must be positive");
  return 4.0 * mass * length * length / (std::numbers::pi * hbar);
}

BoxConfig::BoxConfig(double mass, double length, double hbar)
    : mass_(mass), length_(length), hbar_(hbar),
      revival_(revival_time(mass, length, hbar)) {}

double eigenfunction(const BoxConfig& cfg, int m, double x) {
  if (m < 1) throw std::domain_error("eigenfunction: mode index must be >= 1");
  if (!(x >= 0.0) || !(x <= cfg.length()))
    throw std::domain_error("eigenfunction: position outside the box");
  return std::sqrt(2.0 / cfg.length()) * sin_pi_scaled(m, x / cfg.length());
}

double eigenphase(const BoxConfig& cfg, int m, double t) {
  const double mm = static_cast<double>(m) * m;
  return mm * (2.0 * std::numbers::pi) * (t / cfg.revival());
}

}  // namespace carpetlab
