// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/dfunction.hpp"

#include <cmath>

#include "carpetlab/numerics.hpp"

namespace carpetlab {
namespace {

// theta_S = xi - S * 2 tau + zeta; both evaluation routes must share this
// expression bit-for-bit.
inline double line_argument(double xi, double tau, double zeta, int s) {
  return (xi + zeta) - static_cast<double>(s) * (2.0 * tau);
}

}  // namespace

double dirichlet_kernel(double theta, int k_max) {
  const double reduced = std::remainder(theta, 1.0);
  const double den = sin_pi(reduced);
  if (std::abs(den) < 1e-12) return 2.0 * k_max + 1.0;
  const double num = sin_pi_scaled(2.0 * k_max + 1.0, reduced);
  return num / den;
}

std::complex<double> d_diagonal_pair(double eta, double zeta, double xi,
                                     double tau, int s, int k_k) {
  const double theta = line_argument(xi, tau, zeta, s);
  const int parity = ((s % 2) + 2) % 2;
  NeumaierComplexSum acc;
  for (int k = -k_k; k <= k_k; ++k) {
    const double d = 2.0 * k + parity;  // m' - m''
    acc.add(unit_phase_scaled(-d, theta));
  }
  return unit_phase_scaled(s, eta) * acc.value();
}

std::complex<double> d_diagonal_resummed(double eta, double zeta, double xi,
                                         double tau, int s, int k_k) {
  const double theta = line_argument(xi, tau, zeta, s);
  const double dir = dirichlet_kernel(theta, k_k);
  std::complex<double> factor{dir, 0.0};
  if (((s % 2) + 2) % 2 == 1) factor *= unit_phase_scaled(-1.0, theta);
  return unit_phase_scaled(s, eta) * factor;
}

std::complex<double> d_pair_sum_truncated(double eta, double zeta, double xi,
                                          double tau, const PairTruncation& trunc) {
  NeumaierComplexSum acc;
  for (int m = -trunc.k_m; m <= trunc.k_m; ++m) {
    acc.add(d_diagonal_pair(eta, zeta, xi, tau, 2 * m, trunc.k_k));
    acc.add(d_diagonal_pair(eta, zeta, xi, tau, 2 * m + 1, trunc.k_k));
  }
  return acc.value();
}

std::complex<double> d_resummed_truncated(double eta, double zeta, double xi,
                                          double tau, const PairTruncation& trunc) {
  NeumaierComplexSum acc;
  for (int m = -trunc.k_m; m <= trunc.k_m; ++m) {
    acc.add(d_diagonal_resummed(eta, zeta, xi, tau, 2 * m, trunc.k_k));
    acc.add(d_diagonal_resummed(eta, zeta, xi, tau, 2 * m + 1, trunc.k_k));
  }
  return acc.value();
}

}  // namespace carpetlab
