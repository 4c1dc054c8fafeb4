// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace carpetlab {

// Revival time of the infinite square well, T = 4 M L^2 / (pi hbar).
// Throws std::domain_error on non-positive input.
double revival_time(double mass, double length, double hbar);

// Geometry and units of the well. The numeric core works in the
// dimensionless coordinates xi = x/L and tau = t/T; physical units enter
// only through this type at API boundaries. Immutable after construction,
// safe to share across threads.
class BoxConfig {
 public:
  BoxConfig() : BoxConfig(1.0, 1.0, 1.0) {}
  BoxConfig(double mass, double length, double hbar);

  double mass() const { return mass_; }
  double length() const { return length_; }
  double hbar() const { return hbar_; }
  double revival() const { return revival_; }       // T
  double half_revival() const { return 0.5 * revival_; }

 private:
  double mass_;
  double length_;
  double hbar_;
  double revival_;
};

// u_m(x) = sqrt(2/L) sin(m pi x / L) for m >= 1 and 0 <= x <= L.
// Exactly zero at both walls. Throws std::domain_error otherwise.
double eigenfunction(const BoxConfig& cfg, int m, double x);

// Accumulated phase E_m t / hbar = m^2 * 2 pi t / T.
double eigenphase(const BoxConfig& cfg, int m, double t);

}  // namespace carpetlab
