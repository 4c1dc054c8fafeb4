// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace carpetlab {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  std::size_t max_panels = 1u << 20;  // panel-evaluation budget
  int initial_panels = 8;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_bound;   // sum of accepted per-panel estimates
  std::size_t panels;   // panels accepted
};

// Adaptive Gauss-Kronrod 7/15 bisection with absolute tolerance,
// deterministic left-to-right subdivision order. Throws NumericError
// (carrying the worst panel estimate) when the budget is exhausted.
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const QuadratureOptions& opts = {});

double integrate_real(const std::function<double(double)>& f,
                      double a, double b, const QuadratureOptions& opts = {});

}  // namespace carpetlab
