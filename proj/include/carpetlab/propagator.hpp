// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>

#include "carpetlab/box.hpp"
#include "carpetlab/packet.hpp"

namespace carpetlab {

// psi(x,t) = (1/(i sqrt(2L))) sum_{m=-M}^{M} psi_m exp[i pi m (x/L - m 2t/T)],
// summed in fixed ascending m order with compensated accumulation.
std::complex<double> evolve(const SpectralState& state, const BoxConfig& cfg,
                            double x, double t);

// W(x,t) = |psi(x,t)|^2, tiny negative rounding residue clamped to zero.
double probability_direct(const SpectralState& state, const BoxConfig& cfg,
                          double x, double t);

// Truncated Green's function
//   G(x,t|x') = (1/2L) sum_{|m|<=M} [e^{-i pi m x'/L} - e^{i pi m x'/L}]
//               e^{i pi m (x/L - m 2t/T)}.
// This is a formal series: pointwise values are truncation-dependent and
// only integrals against smooth packets are stable. The source coordinate
// is deliberately unchecked so the formal antisymmetry x' -> -x' of the
// sine decomposition can be probed.
std::complex<double> green_truncated(const BoxConfig& cfg, double x, double t,
                                     double x_source, int m_max);

// Spacetime line coordinate chi_{n,l}(x,t) = x/L - n t/(T/2) - l and the
// dimensionless pieces it was assembled from.
struct ChiValue {
  double value;
  double xi;        // x/L
  double tau_half;  // t/(T/2)
  int n;
  int l;
};

ChiValue chi(int n, int l, double x, double t, const BoxConfig& cfg);

// Dimensionless hot-path form; tau_half = t/(T/2).
inline double chi_value(int n, int l, double xi, double tau_half) {
  return (xi - static_cast<double>(n) * tau_half) - static_cast<double>(l);
}

// Wall-crossing branch selector: the two sign choices of
// t_{n,l}(x=0; .)/(T/2) = -+ s / n - l / n  for s = (x' +- x'')/(2L).
enum class CrossingBranch { plus, minus };

// Time at which the (n,l) line meets the wall x = 0; the n = 0 family is
// vertical (time-independent) and yields no crossing time.
std::optional<double> wall_crossing_time(int n, int l, double s,
                                         CrossingBranch branch,
                                         const BoxConfig& cfg);

}  // namespace carpetlab
