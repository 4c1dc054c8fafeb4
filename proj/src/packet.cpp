// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "carpetlab/numerics.hpp"
#include "carpetlab/quadrature.hpp"

namespace carpetlab {

GaussianPacket::GaussianPacket(const BoxConfig& cfg, double center, double width,
                               double momentum)
    : center_(center), width_(width), momentum_(momentum),
      kbar_(momentum / cfg.hbar()) {
  if (!(center > 0.0) || !(center < cfg.length()))
    throw std::domain_error("GaussianPacket: center must lie strictly inside the box");
  if (!(width > 0.0))
    throw std::domain_error("GaussianPacket: width must be positive");
  const double dl = center / width;
  const double dr = (cfg.length() - center) / width;
  leak_left_ = std::exp(-dl * dl);
  leak_right_ = std::exp(-dr * dr);
  boundary_safe_ = leak_left_ <= 1e-9 && leak_right_ <= 1e-9;
}

std::complex<double> GaussianPacket::amplitude(double x) const {
  const double u = (x - center_) / width_;
  const double mag = std::pow(std::sqrt(std::numbers::pi) * width_, -0.5) *
                     std::exp(-0.5 * u * u);
  const double phase = kbar_ * (x - center_);
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

SpectralState::SpectralState(std::vector<std::complex<double>> coefficients)
    : coeff_(std::move(coefficients)) {
  NeumaierSum norm;
  for (const auto& c : coeff_) norm.add(std::norm(c));
  captured_norm_ = norm.value();
  residual_ = std::max(0.0, 1.0 - captured_norm_);
}

FactorizedPair::FactorizedPair(double center, double width, double wave_number)
    : center_(center), width_(width), kbar_(wave_number),
      prefactor_(std::pow(std::sqrt(std::numbers::pi) * width, -0.5)) {
  if (!(width > 0.0))
    throw std::domain_error("FactorizedPair: width must be positive");
}

double FactorizedPair::phi_plus(double y) const {
  const double u = (0.5 * y - center_) / width_;
  return prefactor_ * std::exp(-u * u);
}

std::complex<double> FactorizedPair::phi_minus(double y) const {
  const double u = y / (2.0 * width_);
  const double mag = prefactor_ * std::exp(-u * u);
  const double phase = -kbar_ * y;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

std::complex<double> fourier_factor(const FactorizedPair& pair, FactorSign sign,
                                    int n, const BoxConfig& cfg) {
  const double length = cfg.length();
  const double dx = pair.width();
  const double kappa = n * std::numbers::pi / (2.0 * length);
  const double scale = std::sqrt(std::sqrt(std::numbers::pi) * dx) / length;
  if (sign == FactorSign::minus) {
    const double arg = (kappa - pair.wave_number()) * dx;
    return {scale * std::exp(-arg * arg), 0.0};
  }
  // phase 2 kappa_n xbar = n pi xbar / L, reduced in half-turns
  const double arg = kappa * dx;
  return scale * std::exp(-arg * arg) *
         unit_phase_scaled(n, pair.center() / length);
}

int default_mode_cutoff(const GaussianPacket& packet, const BoxConfig& cfg) {
  const double kabs = std::abs(packet.wave_number());
  const double dx = packet.width();
  for (int m = 1; m < 1 << 22; ++m) {
    const double km = m * std::numbers::pi / cfg.length();
    const double u = (km - kabs) * dx;
    if (km > kabs && std::exp(-0.5 * u * u) < 1e-14) return std::max(32, m);
  }
  throw std::domain_error("default_mode_cutoff: packet too narrow to truncate");
}

SpectralState expand(const std::function<std::complex<double>(double)>& phi,
                     const BoxConfig& cfg, int m_max) {
  if (m_max < 1) throw std::domain_error("expand: m_max must be >= 1");
  std::vector<std::complex<double>> coeff(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    QuadratureOptions opts;
    opts.abs_tol = 1e-12;
    // seed enough panels to resolve the m half-waves of u_m
    opts.initial_panels = std::max(8, m / 2 + 1);
    const auto r = integrate(
        [&](double x) { return eigenfunction(cfg, m, x) * phi(x); },
        0.0, cfg.length(), opts);
    coeff[static_cast<std::size_t>(m) - 1] = r.value;
  }
  return SpectralState(std::move(coeff));
}

SpectralState expand(const GaussianPacket& packet, const BoxConfig& cfg, int m_max) {
  const int cutoff = m_max > 0 ? m_max : default_mode_cutoff(packet, cfg);
  return expand([&packet](double x) { return packet.amplitude(x); }, cfg, cutoff);
}

FactorizedPair factorize(const GaussianPacket& packet) {
  return FactorizedPair(packet.center(), packet.width(), packet.wave_number());
}

}  // namespace carpetlab
