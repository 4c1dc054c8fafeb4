// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "carpetlab/box.hpp"
#include "carpetlab/packet.hpp"

namespace carpetlab {

struct Truncation {
  int n_max;
  int l_max;
};

// n_max covers every kappa_n within 8 envelope widths of the mean wave
// number; l_max covers every line that can intersect the rendered strip
// t in [0, t_max], plus two guard images.
Truncation default_truncation(const GaussianPacket& packet, const BoxConfig& cfg,
                              double t_max_over_T);

struct TermParts {
  double classical;
  double mirror;
  double interference;
  double total() const { return (classical + mirror) + interference; }
};

// Closed-form Gaussian carpet: the double sum over spacetime lines
//   W(x,t) = 1/(2L) sum_{n,l} (-1)^{n l} {
//       exp[-((L chi - xbar)/dx)^2] exp[-((kappa_n - kbar)/dkappa)^2]
//     + exp[-((L chi + xbar)/dx)^2] exp[-((kappa_n + kbar)/dkappa)^2]
//     - 2 exp[-(kappa_n/dkappa)^2] exp[-(L chi/dx)^2]
//         cos[2 (kbar L chi - kappa_n xbar)] }
// with chi = chi_{n,l}(x,t). The production path skips (n,l) terms whose
// position envelopes all underflow to exact zero, which is bit-identical
// to the plain full sum; the unwindowed form is kept as the serial
// reference for tests and benchmarks.
class GaussianLineEvaluator {
 public:
  GaussianLineEvaluator(const GaussianPacket& packet, const BoxConfig& cfg,
                        Truncation trunc);

  double value(double x, double t) const;             // windowed inner loop
  double value_unwindowed(double x, double t) const;  // full sum, reference
  TermParts decompose(double x, double t) const;

  const Truncation& truncation() const { return trunc_; }

  // Interference modulation factor cos[2(kbar L chi - kappa_n xbar)] at the
  // line centre chi = 0, evaluated in half-turns so half-integer arguments
  // give an exact zero.
  double interference_modulation(int n) const;

 private:
  struct ModeRow {
    double env_classical;
    double env_mirror;
    double env_interference;
  };

  struct LineTerms {
    double classical;
    double mirror;
    double interference;
    bool vanished;  // all position envelopes underflowed to exact zero
  };

  LineTerms line_terms(int row_index, int n, int l, double chi) const;

  std::vector<ModeRow> rows_;  // n = -n_max .. n_max
  Truncation trunc_;
  double length_;
  double half_revival_;
  double xbar_;
  double inv_width_;
  double kbar_;
  double xbar_over_length_;
  double mod_rate_;  // 2 kbar L / pi, cosine slope in half-turns per unit chi
  double window_chi_;
};

// General factorised-packet carpet
//   W(x,t) = 1/2 sum_{n,l} (-1)^{n l} {
//       phitilde_minus(kappa_n) [phi_plus(2L chi(x,t)) + phi_plus(2L chi(-x,t))]
//     - phitilde_plus(kappa_n)  [phi_minus(2L chi(x,t)) + phi_minus(2L chi(-x,t))] }.
// Returns the raw real part; the imaginary residue is tracked separately.
class FactorizedEvaluator {
 public:
  FactorizedEvaluator(const FactorizedPair& pair, const BoxConfig& cfg,
                      Truncation trunc);

  double value(double x, double t) const;

  struct ValueWithResidual {
    double value;
    double imag_residual;
  };
  ValueWithResidual value_with_residual(double x, double t) const;

  const Truncation& truncation() const { return trunc_; }

 private:
  FactorizedPair pair_;
  std::vector<double> ft_minus_;                 // real, n = -n_max..n_max
  std::vector<std::complex<double>> ft_plus_;
  Truncation trunc_;
  double length_;
  double half_revival_;
  double inv_width_;
  double xbar_;
};

// One predicted spacetime line. Interference weights include the magnitude
// of the cosine modulation, so fully washed-out traces carry weight zero.
enum class TermClass { classical, mirror, interference };
enum class TraceKind { ridge, canal, mixed };

struct TraceEvent {
  int n;
  int l;
  int slope_inverse;        // = n; 0 marks the vertical family
  double origin_x_over_L;   // t = 0 intercept folded into [0, 1)
  TermClass term_class;
  double weight;
  double modulation_phase;  // cosine argument at line centre; 0 outside interference
  TraceKind classification;
};

const char* to_string(TermClass c);
const char* to_string(TraceKind k);

// Enumerates the (n, l) lines whose family weight reaches
// threshold * (family maximum) and which cross the strip
// [0, L] x [0, t_max], classified per the sign of their local
// contribution to W. Coincident classical/mirror lines (xbar = L/2,
// kbar = 0) are merged. Sorted by descending weight, ties by
// (|n|, n, l) ascending.
std::vector<TraceEvent> trace_catalog(const GaussianPacket& packet,
                                      const BoxConfig& cfg,
                                      double weight_threshold,
                                      double t_max_over_T = 0.5);

// Free-function forms of the evaluators.
double carpet_gaussian(const GaussianPacket& packet, const BoxConfig& cfg,
                       double x, double t, int n_max, int l_max);
double carpet_factorized(const FactorizedPair& pair, const BoxConfig& cfg,
                         double x, double t, int n_max, int l_max);
TermParts term_decomposition(const GaussianPacket& packet, const BoxConfig& cfg,
                             double x, double t, Truncation trunc);

}  // namespace carpetlab
