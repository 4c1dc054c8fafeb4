// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "carpetlab/numerics.hpp"
#include "carpetlab/propagator.hpp"

namespace carpetlab {
namespace {

// exp(-a) with a >= kExpUnderflow is exactly +0.0 in double precision, so
// terms whose position envelopes all clear this bound can be skipped
// without changing a compensated sum by a single bit.
constexpr double kExpUnderflow = 768.0;

double fold_unit(double v) {
  double f = v - std::floor(v);
  if (f >= 1.0) f = 0.0;  // rounding at the seam
  return f;
}

}  // namespace

Truncation default_truncation(const GaussianPacket& packet, const BoxConfig& cfg,
                              double t_max_over_T) {
  const double kabs = std::abs(packet.wave_number());
  const double dkappa = packet.kappa_width();
  const int n_max = static_cast<int>(
      std::ceil((kabs + 8.0 * dkappa) * 2.0 * cfg.length() / std::numbers::pi));
  const double tau_half_max = 2.0 * t_max_over_T;
  const int l_max = static_cast<int>(std::ceil(tau_half_max * n_max)) + 2;
  return {n_max, l_max};
}

GaussianLineEvaluator::GaussianLineEvaluator(const GaussianPacket& packet,
                                             const BoxConfig& cfg, Truncation trunc)
    : trunc_(trunc),
      length_(cfg.length()),
      half_revival_(cfg.half_revival()),
      xbar_(packet.center()),
      inv_width_(1.0 / packet.width()),
      kbar_(packet.wave_number()),
      xbar_over_length_(packet.center() / cfg.length()),
      mod_rate_(2.0 * packet.wave_number() * cfg.length() / std::numbers::pi) {
  if (trunc_.n_max < 1 || trunc_.l_max < 1)
    throw std::domain_error("GaussianLineEvaluator: truncations must be >= 1");
  const double dx = packet.width();
  rows_.resize(static_cast<std::size_t>(2 * trunc_.n_max + 1));
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const double kappa = n * std::numbers::pi / (2.0 * length_);
    const double a_cl = (kappa - kbar_) * dx;
    const double a_mi = (kappa + kbar_) * dx;
    const double a_in = kappa * dx;
    rows_[static_cast<std::size_t>(n + trunc_.n_max)] = {
        std::exp(-a_cl * a_cl), std::exp(-a_mi * a_mi), std::exp(-a_in * a_in)};
  }
  window_chi_ = (xbar_ + std::sqrt(kExpUnderflow) * dx) / length_;
}

GaussianLineEvaluator::LineTerms GaussianLineEvaluator::line_terms(
    int row_index, int n, int l, double chi) const {
  const double lchi = length_ * chi;
  const double u_cl = (lchi - xbar_) * inv_width_;
  const double u_mi = (lchi + xbar_) * inv_width_;
  const double u_in = lchi * inv_width_;
  const double a_cl = u_cl * u_cl;
  const double a_mi = u_mi * u_mi;
  const double a_in = u_in * u_in;
  if (a_cl >= kExpUnderflow && a_mi >= kExpUnderflow && a_in >= kExpUnderflow)
    return {0.0, 0.0, 0.0, true};

  const ModeRow& row = rows_[static_cast<std::size_t>(row_index)];
  const double par = parity_weight(n, l);
  const double q = mod_rate_ * chi - static_cast<double>(n) * xbar_over_length_;
  return {par * row.env_classical * std::exp(-a_cl),
          par * row.env_mirror * std::exp(-a_mi),
          -2.0 * par * row.env_interference * std::exp(-a_in) * cos_pi(q),
          false};
}

double GaussianLineEvaluator::value(double x, double t) const {
  const double xi = x / length_;
  const double tau_half = t / half_revival_;
  NeumaierSum acc;
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const int row = n + trunc_.n_max;
    const double centre = xi - static_cast<double>(n) * tau_half;
    const int lo = std::max(-trunc_.l_max,
                            static_cast<int>(std::ceil(centre - window_chi_)) - 1);
    const int hi = std::min(trunc_.l_max,
                            static_cast<int>(std::floor(centre + window_chi_)) + 1);
    for (int l = lo; l <= hi; ++l) {
      const LineTerms terms = line_terms(row, n, l, chi_value(n, l, xi, tau_half));
      if (terms.vanished) continue;
      acc.add((terms.classical + terms.mirror) + terms.interference);
    }
  }
  const double w = acc.value() / (2.0 * length_);
  return w > 0.0 ? w : 0.0;
}

double GaussianLineEvaluator::value_unwindowed(double x, double t) const {
  const double xi = x / length_;
  const double tau_half = t / half_revival_;
  NeumaierSum acc;
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const int row = n + trunc_.n_max;
    for (int l = -trunc_.l_max; l <= trunc_.l_max; ++l) {
      const LineTerms terms = line_terms(row, n, l, chi_value(n, l, xi, tau_half));
      acc.add((terms.classical + terms.mirror) + terms.interference);
    }
  }
  const double w = acc.value() / (2.0 * length_);
  return w > 0.0 ? w : 0.0;
}

TermParts GaussianLineEvaluator::decompose(double x, double t) const {
  const double xi = x / length_;
  const double tau_half = t / half_revival_;
  NeumaierSum classical, mirror, interference;
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const int row = n + trunc_.n_max;
    const double centre = xi - static_cast<double>(n) * tau_half;
    const int lo = std::max(-trunc_.l_max,
                            static_cast<int>(std::ceil(centre - window_chi_)) - 1);
    const int hi = std::min(trunc_.l_max,
                            static_cast<int>(std::floor(centre + window_chi_)) + 1);
    for (int l = lo; l <= hi; ++l) {
      const LineTerms terms = line_terms(row, n, l, chi_value(n, l, xi, tau_half));
      if (terms.vanished) continue;
      classical.add(terms.classical);
      mirror.add(terms.mirror);
      interference.add(terms.interference);
    }
  }
  const double scale = 1.0 / (2.0 * length_);
  return {classical.value() * scale, mirror.value() * scale,
          interference.value() * scale};
}

double GaussianLineEvaluator::interference_modulation(int n) const {
  return cos_pi(static_cast<double>(n) * xbar_over_length_);
}

FactorizedEvaluator::FactorizedEvaluator(const FactorizedPair& pair,
                                         const BoxConfig& cfg, Truncation trunc)
    : pair_(pair),
      trunc_(trunc),
      length_(cfg.length()),
      half_revival_(cfg.half_revival()),
      inv_width_(1.0 / pair.width()),
      xbar_(pair.center()) {
  if (trunc_.n_max < 1 || trunc_.l_max < 1)
    throw std::domain_error("FactorizedEvaluator: truncations must be >= 1");
  const std::size_t count = static_cast<std::size_t>(2 * trunc_.n_max + 1);
  ft_minus_.resize(count);
  ft_plus_.resize(count);
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const std::size_t i = static_cast<std::size_t>(n + trunc_.n_max);
    ft_minus_[i] = fourier_factor(pair, FactorSign::minus, n, cfg).real();
    ft_plus_[i] = fourier_factor(pair, FactorSign::plus, n, cfg);
  }
}

FactorizedEvaluator::ValueWithResidual FactorizedEvaluator::value_with_residual(
    double x, double t) const {
  const double xi = x / length_;
  const double tau_half = t / half_revival_;
  NeumaierComplexSum acc;
  for (int n = -trunc_.n_max; n <= trunc_.n_max; ++n) {
    const std::size_t row = static_cast<std::size_t>(n + trunc_.n_max);
    const double ftm = ft_minus_[row];
    const std::complex<double> ftp = ft_plus_[row];
    if (ftm == 0.0 && ftp == std::complex<double>(0.0, 0.0)) continue;
    for (int l = -trunc_.l_max; l <= trunc_.l_max; ++l) {
      const double chi_fwd = chi_value(n, l, xi, tau_half);
      const double chi_ref = chi_value(n, l, -xi, tau_half);
      const double lcf = length_ * chi_fwd;
      const double lcr = length_ * chi_ref;
      // position-envelope exponents of the four factor evaluations
      const double p1 = (lcf - xbar_) * inv_width_;
      const double p2 = (lcr - xbar_) * inv_width_;
      const double p3 = lcf * inv_width_;
      const double p4 = lcr * inv_width_;
      if (p1 * p1 >= kExpUnderflow && p2 * p2 >= kExpUnderflow &&
          p3 * p3 >= kExpUnderflow && p4 * p4 >= kExpUnderflow)
        continue;
      const double par = parity_weight(n, l);
      const double plus_part = pair_.phi_plus(2.0 * lcf) + pair_.phi_plus(2.0 * lcr);
      const std::complex<double> minus_part =
          pair_.phi_minus(2.0 * lcf) + pair_.phi_minus(2.0 * lcr);
      acc.add(par * (ftm * plus_part - ftp * minus_part));
    }
  }
  const std::complex<double> total = acc.value();
  return {0.5 * total.real(), 0.5 * std::abs(total.imag())};
}

double FactorizedEvaluator::value(double x, double t) const {
  return value_with_residual(x, t).value;
}

const char* to_string(TermClass c) {
  switch (c) {
    case TermClass::classical: return "classical";
    case TermClass::mirror: return "mirror";
    case TermClass::interference: return "interference";
  }
  return "?";
}

const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::ridge: return "ridge";
    case TraceKind::canal: return "canal";
    case TraceKind::mixed: return "mixed";
  }
  return "?";
}

std::vector<TraceEvent> trace_catalog(const GaussianPacket& packet,
                                      const BoxConfig& cfg,
                                      double weight_threshold,
                                      double t_max_over_T) {
  if (!(weight_threshold > 0.0) || !(weight_threshold <= 1.0))
    throw std::domain_error("trace_catalog: threshold must lie in (0, 1]");
  const Truncation trunc = default_truncation(packet, cfg, t_max_over_T);
  const double length = cfg.length();
  const double dx = packet.width();
  const double kbar = packet.wave_number();
  const double xol = packet.center() / length;
  const double tau_half_max = 2.0 * t_max_over_T;
  const double margin = 2.0 * dx / length;
  // phase swing of the interference cosine across one envelope width;
  // past a quarter period the sign flips inside the trace profile
  const bool mixed_modulation = 2.0 * std::abs(kbar) * dx >= std::numbers::pi / 2.0;

  const int count = 2 * trunc.n_max + 1;
  std::vector<double> env_cl(count), env_mi(count), env_in(count), modfac(count);
  double max_cl = 0.0, max_mi = 0.0, max_in = 0.0;
  for (int n = -trunc.n_max; n <= trunc.n_max; ++n) {
    const int i = n + trunc.n_max;
    const double kappa = n * std::numbers::pi / (2.0 * length);
    const double a_cl = (kappa - kbar) * dx;
    const double a_mi = (kappa + kbar) * dx;
    const double a_in = kappa * dx;
    env_cl[i] = std::exp(-a_cl * a_cl);
    env_mi[i] = std::exp(-a_mi * a_mi);
    modfac[i] = cos_pi(static_cast<double>(n) * xol);
    env_in[i] = std::exp(-a_in * a_in) * std::abs(modfac[i]);
    max_cl = std::max(max_cl, env_cl[i]);
    max_mi = std::max(max_mi, env_mi[i]);
    max_in = std::max(max_in, env_in[i]);
  }

  std::vector<TraceEvent> events;
  auto emit_family = [&](TermClass cls, double origin_offset,
                         const std::vector<double>& weight, double family_max) {
    if (family_max <= 0.0) return;
    for (int n = -trunc.n_max; n <= trunc.n_max; ++n) {
      const int i = n + trunc.n_max;
      if (weight[i] < weight_threshold * family_max) continue;
      const double drift = static_cast<double>(n) * tau_half_max;
      const int l_lo = static_cast<int>(
          std::ceil(-margin - origin_offset - std::max(0.0, drift)));
      const int l_hi = static_cast<int>(
          std::floor(1.0 + margin - origin_offset - std::min(0.0, drift)));
      for (int l = l_lo; l <= l_hi; ++l) {
        TraceEvent ev;
        ev.n = n;
        ev.l = l;
        ev.slope_inverse = n;
        ev.origin_x_over_L = fold_unit(origin_offset + l);
        ev.term_class = cls;
        ev.weight = weight[i];
        ev.modulation_phase = 0.0;
        ev.classification = TraceKind::ridge;
        if (cls == TermClass::interference) {
          const double kappa = n * std::numbers::pi / (2.0 * length);
          ev.modulation_phase = -2.0 * kappa * packet.center();
          if (mixed_modulation) {
            ev.classification = TraceKind::mixed;
          } else {
            // interference enters W with an overall minus sign, so a
            // positive local cosine (parity included) depresses W
            const double local = parity_weight(n, l) * modfac[i];
            ev.classification = local > 0.0 ? TraceKind::canal : TraceKind::ridge;
          }
        }
        events.push_back(ev);
      }
    }
  };

  emit_family(TermClass::classical, xol, env_cl, max_cl);
  emit_family(TermClass::mirror, -xol, env_mi, max_mi);
  emit_family(TermClass::interference, 0.0, env_in, max_in);

  // merge coincident classical/mirror lines (xbar = L/2 with kbar = 0)
  std::map<std::tuple<int, int, double>, std::size_t> seen;
  std::vector<TraceEvent> merged;
  merged.reserve(events.size());
  for (const TraceEvent& ev : events) {
    const auto key = std::make_tuple(ev.n, ev.l, ev.origin_x_over_L);
    auto [it, inserted] = seen.try_emplace(key, merged.size());
    if (inserted) {
      merged.push_back(ev);
      continue;
    }
    TraceEvent& kept = merged[it->second];
    if (ev.term_class == TermClass::interference ||
        kept.term_class == TermClass::interference) {
      merged.push_back(ev);  // interference lines stay distinct events
      continue;
    }
    kept.weight += ev.weight;
  }

  std::sort(merged.begin(), merged.end(), [](const TraceEvent& a, const TraceEvent& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    const int aa = std::abs(a.n), ab = std::abs(b.n);
    if (aa != ab) return aa < ab;
    if (a.n != b.n) return a.n < b.n;
    return a.l < b.l;
  });
  return merged;
}

double carpet_gaussian(const GaussianPacket& packet, const BoxConfig& cfg,
                       double x, double t, int n_max, int l_max) {
  return GaussianLineEvaluator(packet, cfg, {n_max, l_max}).value(x, t);
}

double carpet_factorized(const FactorizedPair& pair, const BoxConfig& cfg,
                         double x, double t, int n_max, int l_max) {
  return FactorizedEvaluator(pair, cfg, {n_max, l_max}).value(x, t);
}

TermParts term_decomposition(const GaussianPacket& packet, const BoxConfig& cfg,
                             double x, double t, Truncation trunc) {
  return GaussianLineEvaluator(packet, cfg, trunc).decompose(x, t);
}

}  // namespace carpetlab
