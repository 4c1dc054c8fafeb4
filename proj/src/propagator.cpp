// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/propagator.hpp"

#include <cmath>

#include "carpetlab/numerics.hpp"

namespace carpetlab {

std::complex<double> evolve(const SpectralState& state, const BoxConfig& cfg,
                            double x, double t) {
  const double xi = x / cfg.length();
  const double tau2 = 2.0 * t / cfg.revival();  // t/(T/2)
  const int cutoff = state.mode_cutoff();

  NeumaierComplexSum acc;
  for (int m = -cutoff; m <= cutoff; ++m) {
    if (m == 0) continue;  // psi_0 = 0
    const double md = static_cast<double>(m);
    const double q = half_turns(md, xi) - half_turns(md * md, tau2);
    acc.add(state.coefficient(m) * unit_phase(q));
  }
  const std::complex<double> prefactor{0.0, -1.0 / std::sqrt(2.0 * cfg.length())};
  return prefactor * acc.value();
}

double probability_direct(const SpectralState& state, const BoxConfig& cfg,
                          double x, double t) {
  const double w = std::norm(evolve(state, cfg, x, t));
  return (w < 0.0 && w > -1e-15) ? 0.0 : w;
}

std::complex<double> green_truncated(const BoxConfig& cfg, double x, double t,
                                     double x_source, int m_max) {
  const double xi = x / cfg.length();
  const double xi_src = x_source / cfg.length();
  const double tau2 = 2.0 * t / cfg.revival();

  NeumaierComplexSum acc;
  for (int m = -m_max; m <= m_max; ++m) {
    if (m == 0) continue;  // bracket vanishes
    const double md = static_cast<double>(m);
    // e^{-i pi m xi'} - e^{i pi m xi'} = -2i sin(pi m xi')
    const std::complex<double> source{0.0, -2.0 * sin_pi_scaled(md, xi_src)};
    const double q = half_turns(md, xi) - half_turns(md * md, tau2);
    acc.add(source * unit_phase(q));
  }
  return acc.value() / (2.0 * cfg.length());
}

ChiValue chi(int n, int l, double x, double t, const BoxConfig& cfg) {
  const double xi = x / cfg.length();
  const double tau_half = t / cfg.half_revival();
  return {chi_value(n, l, xi, tau_half), xi, tau_half, n, l};
}

std::optional<double> wall_crossing_time(int n, int l, double s,
                                         CrossingBranch branch,
                                         const BoxConfig& cfg) {
  if (n == 0) return std::nullopt;  // vertical line, never meets the wall
  const double signed_s = branch == CrossingBranch::minus ? -s : s;
  return cfg.half_revival() * (signed_s - static_cast<double>(l)) /
         static_cast<double>(n);
}

}  // namespace carpetlab
