// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace carpetlab {

// Truncation rectangle in the (m, k) index plane that replaces the pair
// indices (m', m'') via 2m = m'+m'', 2k = m'-m'' (even branch) and
// 2m+1 = m'+m'', 2k+1 = m'-m'' (odd branch). Both parities are included,
// which makes the pair <-> resummed bijection exact at finite truncation.
struct PairTruncation {
  int k_m = 24;
  int k_k = 24;
};

// Dirichlet kernel sum_{k=-K}^{K} e^{-2 pi i k theta}
//   = sin((2K+1) pi theta) / sin(pi theta),
// periodic with period 1; the removable singularity at integer theta is
// evaluated as 2K+1 (triggered when |sin(pi theta)| < 1e-12).
double dirichlet_kernel(double theta, int k_max);

// The intermode trace generator
//   D(eta; zeta) = sum_{m',m''} e^{i pi (m'+m'') eta}
//                  e^{-i pi (m'-m'') [xi - (m'+m'') 2 tau + zeta]}
// restricted to the truncation rectangle, evaluated two ways.

// Direct double sum over the pair set.
std::complex<double> d_pair_sum_truncated(double eta, double zeta, double xi,
                                          double tau, const PairTruncation& trunc = {});

// Same set, with each fixed-steepness diagonal m'+m'' = S collapsed into a
// closed-form Dirichlet factor (odd diagonals carry the extra e^{-i pi theta}).
std::complex<double> d_resummed_truncated(double eta, double zeta, double xi,
                                          double tau, const PairTruncation& trunc = {});

// Single steepness diagonal m'+m'' = S, |m'-m''| limited by the (m,k)
// rectangle: the direct sum and its closed form. These expose the
// degeneracy that many index pairs feed one spacetime slope.
std::complex<double> d_diagonal_pair(double eta, double zeta, double xi,
                                     double tau, int s, int k_k);
std::complex<double> d_diagonal_resummed(double eta, double zeta, double xi,
                                         double tau, int s, int k_k);

}  // namespace carpetlab
