// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace carpetlab {

// Neumaier's variant of compensated summation. Unlike plain Kahan,
// adding an exact zero leaves both the running sum and the compensation
// untouched, so skipping terms that underflow to zero is bit-identical
// to accumulating them.
class NeumaierSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class NeumaierComplexSum {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  NeumaierSum re_;
  NeumaierSum im_;
};

// ---- trig in half-turn units -------------------------------------------
//
// Every phase in the spectral sums is pi times (integer) times (reduced
// coordinate). Working in half-turns and reducing modulo 2 *before*
// multiplying by pi keeps trig arguments small for arbitrarily large mode
// indices, and makes the integer and half-integer cases exact.

// sin(pi q), exact at integer and half-integer q.
inline double sin_pi(double q) {
  const double r = std::remainder(q, 2.0);
  const double a = std::abs(r);
  if (a == 0.0 || a == 1.0) return 0.0;
  if (a == 0.5) return std::copysign(1.0, r);
  return std::sin(std::numbers::pi * r);
}

// cos(pi q), exact at integer and half-integer q.
inline double cos_pi(double q) {
  const double r = std::remainder(q, 2.0);
  const double a = std::abs(r);
  if (a == 0.0) return 1.0;
  if (a == 0.5) return 0.0;
  if (a == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

// (c*q) reduced modulo 2 with the product split exactly via fma, for
// integer-valued c up to ~2^26. The result may exceed [-1, 1] by the
// residual; downstream sin_pi/cos_pi reduce again.
inline double half_turns(double c, double q) {
  const double p = c * q;
  const double e = std::fma(c, q, -p);
  return std::remainder(p, 2.0) + e;
}

inline double sin_pi_scaled(double c, double q) { return sin_pi(half_turns(c, q)); }
inline double cos_pi_scaled(double c, double q) { return cos_pi(half_turns(c, q)); }

// e^{i pi q}
inline std::complex<double> unit_phase(double q) {
  return {cos_pi(q), sin_pi(q)};
}

// e^{i pi c q} with exact product reduction.
inline std::complex<double> unit_phase_scaled(double c, double q) {
  return unit_phase(half_turns(c, q));
}

// Parity weight (-1)^(n*l) without overflow for any int pair.
inline double parity_weight(int n, int l) {
  return ((static_cast<long long>(n) * l) & 1LL) ? -1.0 : 1.0;
}

}  // namespace carpetlab
