#pragma once

#include "photonsub/states.hpp"

namespace photonsub {

/// Loss-channel parameters: sample absorption gamma and detection
/// efficiency eta. tau is always derived, never stored independently.
struct ChannelParams {
  double gamma = 0.0;
  double eta = 1.0;

  double tau() const { return eta * (1.0 - gamma); }
  void validate() const; // gamma in [0,1], eta in (0,1]
};

double equivalent_transmittance(const ChannelParams& params);

/// Beam-splitter loss on a diagonal state: binomial redistribution
/// P_out(l) = sum_j P_in(j) C(j,l) tau^l (1-tau)^(j-l).
FockDensity apply_loss(const FockDensity& rho, double tau);

} // namespace photonsub
