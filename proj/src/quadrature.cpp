// SPDX-License-Identifier: Apache-2.0
#include "carpetlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "carpetlab/errors.hpp"
#include "carpetlab/numerics.hpp"

namespace carpetlab {
namespace {

// Kronrod-15 abscissae (non-negative half) and weights; Gauss-7 weights
// sit under the odd-index abscissae plus the centre node.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  std::complex<double> kronrod;
  double error;
};

PanelEstimate gk15(const std::function<std::complex<double>(double)>& f,
                   double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const std::complex<double> fc = f(centre);
  std::complex<double> kron = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const std::complex<double> fsum = f(centre - dx) + f(centre + dx);
    kron += fsum * kWgk[j];
    if (j % 2 == 1) gauss += fsum * kWg[j / 2];
  }
  kron *= half;
  gauss *= half;
  return {kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const QuadratureOptions& opts) {
  if (a == b) return {0.0, 0.0, 0};
  const double total_width = std::abs(b - a);
  const int seeds = std::max(1, opts.initial_panels);

  struct Segment {
    double a, b;
  };
  std::vector<Segment> stack;
  stack.reserve(64);
  // seed panels pushed right-to-left so the leftmost pops first
  for (int i = seeds; i-- > 0;) {
    const double x0 = a + (b - a) * (static_cast<double>(i) / seeds);
    const double x1 = a + (b - a) * (static_cast<double>(i + 1) / seeds);
    stack.push_back({x0, x1});
  }

  NeumaierComplexSum value;
  NeumaierSum error;
  std::size_t used = 0;
  double worst = 0.0;

  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    if (++used > opts.max_panels)
      throw NumericError("quadrature: panel budget exhausted", worst);

    const PanelEstimate est = gk15(f, seg.a, seg.b);
    worst = std::max(worst, est.error);
    const double width = std::abs(seg.b - seg.a);
    const double local_tol = opts.abs_tol * (width / total_width);
    const double mid = 0.5 * (seg.a + seg.b);
    if (est.error <= local_tol || mid <= seg.a || mid >= seg.b) {
      value.add(est.kronrod);
      error.add(est.error);
      continue;
    }
    stack.push_back({mid, seg.b});
    stack.push_back({seg.a, mid});
  }
  return {value.value(), error.value(), used};
}

double integrate_real(const std::function<double(double)>& f,
                      double a, double b, const QuadratureOptions& opts) {
  const auto r = integrate(
      [&f](double x) { return std::complex<double>(f(x), 0.0); }, a, b, opts);
  return r.value.real();
}

}  // namespace carpetlab
