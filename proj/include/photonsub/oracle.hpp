#pragma once

#include <vector>

#include "photonsub/states.hpp"

namespace photonsub::oracle {

/// Two-mode amplitudes c_n of |m+n, n> for the m-fold subtracted twin-beam
/// state (real amplitudes, squeezing angle fixed to zero).
struct TwoModeAmplitudes {
  int m = 0;
  double lambda = 0.0;
  int n_max = 0;
  std::vector<double> amps; // c_n, n = 0..n_max

  double norm_squared() const;
  /// Partial trace over the idler: P(m+n) = c_n^2.
  FockDensity reduced_signal(double tail_tol = 1e-12) const;
};

/// Brute-force construction of the two-mode state at finite truncation.
/// Throws if the amplitude tail at n_max exceeds 1e-12.
TwoModeAmplitudes build_two_mode(int m, double lambda, int n_max);

/// Lossy Wigner value by exact m-th-order jet differentiation of the closed
/// form (1-x)^{m+1}/(pi m!) d^m/dx^m [ exp(-(q^2+p^2)(1-x)/(1+x(2tau-1))) /
/// (1+x(2tau-1)) ] at x = lambda/(1+lambda). Supports m <= 6.
double derivative_route_wigner(int m, double lambda, double tau, double q, double p);

/// Lossy Wigner value by the long way round: two-mode amplitudes, partial
/// trace, binomial loss convolution, then a lossless Fock-Wigner sum.
double two_mode_route_wigner(int m, double lambda, double tau, double q, double p,
                             double tol = 1e-12);

/// Exact Fisher information of the photon-count distribution Binomial(j, tau)
/// with tau = eta(1-gamma), with respect to gamma: j eta^2 / (tau (1-tau)).
double exact_fock_loss_fisher(int j, double gamma, double eta);

} // namespace photonsub::oracle
