// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "carpetlab/box.hpp"

namespace carpetlab {

// Normalised Gaussian wave packet
//   g(x) = (sqrt(pi) dx)^{-1/2} exp[-((x-xbar)/dx)^2 / 2] exp[i kbar (x-xbar)]
// of width dx centred at xbar, moving with mean momentum pbar = hbar*kbar.
// Normalisation is over the whole real line; the in-box norm deficit is
// reported through the wall-leakage diagnostics, not corrected.
class GaussianPacket {
 public:
  GaussianPacket(const BoxConfig& cfg, double center, double width, double momentum);

  double center() const { return center_; }        // xbar
  double width() const { return width_; }          // dx
  double momentum() const { return momentum_; }    // pbar
  double wave_number() const { return kbar_; }     // kbar = pbar/hbar
  double kappa_width() const { return 1.0 / width_; }  // dkappa = 1/dx

  // exp[-(xbar/dx)^2] and exp[-((L-xbar)/dx)^2]; a packet is flagged
  // boundary-unsafe when either exceeds 1e-9.
  double leakage_left() const { return leak_left_; }
  double leakage_right() const { return leak_right_; }
  bool boundary_safe() const { return boundary_safe_; }

  std::complex<double> amplitude(double x) const;

 private:
  double center_;
  double width_;
  double momentum_;
  double kbar_;
  double leak_left_;
  double leak_right_;
  bool boundary_safe_;
};

// Truncated eigenmode coefficients psi_m for m = 1..M, extended to signed
// indices by antisymmetry psi_{-m} = -psi_m, psi_0 = 0. Immutable.
class SpectralState {
 public:
  explicit SpectralState(std::vector<std::complex<double>> coefficients);

  int mode_cutoff() const { return static_cast<int>(coeff_.size()); }  // M_max

  // Signed-index accessor; |m| beyond the cutoff yields 0.
  std::complex<double> coefficient(int m) const {
    const int a = m < 0 ? -m : m;
    if (a == 0 || a > mode_cutoff()) return {0.0, 0.0};
    const std::complex<double> c = coeff_[static_cast<std::size_t>(a) - 1];
    return m < 0 ? -c : c;
  }

  double captured_norm() const { return captured_norm_; }       // sum |psi_m|^2, m>=1
  double truncation_residual() const { return residual_; }      // max(0, 1 - captured)

 private:
  std::vector<std::complex<double>> coeff_;
  double captured_norm_;
  double residual_;
};

// Factorised form of the Gaussian bilinear g*(x') g(x''):
//   g*(x') g(x'') = phi_plus(x'+x'') * phi_minus(x'-x'')
// with both factors again Gaussian. Stored as closed-form parameters.
class FactorizedPair {
 public:
  FactorizedPair(double center, double width, double wave_number);

  double center() const { return center_; }
  double width() const { return width_; }
  double wave_number() const { return kbar_; }

  // phi_plus(y) = (sqrt(pi) dx)^{-1/2} exp[-((y/2 - xbar)/dx)^2], real.
  double phi_plus(double y) const;
  // phi_minus(y) = (sqrt(pi) dx)^{-1/2} exp[-(y/(2 dx))^2] exp(-i kbar y).
  std::complex<double> phi_minus(double y) const;

 private:
  double center_;
  double width_;
  double kbar_;
  double prefactor_;  // (sqrt(pi) dx)^{-1/2}
};

enum class FactorSign { plus, minus };

// Fourier factor phitilde_pm(kappa_n) = (1/2L) Integral dy e^{i kappa_n y} phi_pm(y)
// with kappa_n = n pi / (2L), evaluated in closed form:
//   phitilde_minus = (sqrt(pi) dx)^{1/2}/L * exp[-((kappa_n - kbar) dx)^2]
//   phitilde_plus  = (sqrt(pi) dx)^{1/2}/L * exp[i 2 kappa_n xbar] exp[-(kappa_n dx)^2]
std::complex<double> fourier_factor(const FactorizedPair& pair, FactorSign sign,
                                    int n, const BoxConfig& cfg);

// Smallest M with the spectral envelope exp[-(k_M - |kbar|)^2 dx^2 / 2]
// below 1e-14, floored at 32.
int default_mode_cutoff(const GaussianPacket& packet, const BoxConfig& cfg);

// psi_m = Integral_0^L u_m(x) phi(x) dx by adaptive quadrature to 1e-12
// absolute, for m = 1..m_max. Throws NumericError on non-convergence.
SpectralState expand(const std::function<std::complex<double>(double)>& phi,
                     const BoxConfig& cfg, int m_max);

// Gaussian overload; m_max = 0 selects default_mode_cutoff.
SpectralState expand(const GaussianPacket& packet, const BoxConfig& cfg, int m_max = 0);

// Gaussian factorisation. Factorisation support is Gaussian-only; other
// packets go through expand() and the direct evaluator.
FactorizedPair factorize(const GaussianPacket& packet);

}  // namespace carpetlab
