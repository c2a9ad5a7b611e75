#include "photonsub/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace photonsub {

void ChannelParams::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("gamma must lie in [0,1]");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("eta must lie in (0,1]");
}

double equivalent_transmittance(const ChannelParams& params) {
  params.validate();
  return params.tau();
}

FockDensity apply_loss(const FockDensity& rho, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("apply_loss: tau must lie in [0,1]");
  if (tau == 1.0) return rho;

  FockDensity out;
  out.dim = rho.dim;
  out.probs.assign(rho.probs.size(), 0.0);
  out.tail_bound = rho.tail_bound;
  if (tau == 0.0) {
    if (out.dim > 0) out.probs[0] = rho.total_mass();
    return out;
  }

  // log-factorial table for the binomial coefficients
  std::vector<double> lfact(static_cast<size_t>(rho.dim), 0.0);
  for (int n = 1; n < rho.dim; ++n)
    lfact[static_cast<size_t>(n)] = lfact[static_cast<size_t>(n) - 1] + std::log(n);
  const double ltau = std::log(tau);
  const double lref = std::log1p(-tau);

  for (int j = 0; j < rho.dim; ++j) {
    const double pj = rho.probs[static_cast<size_t>(j)];
    if (pj == 0.0) continue;
    for (int l = 0; l <= j; ++l) {
      const double lpmf = lfact[static_cast<size_t>(j)] - lfact[static_cast<size_t>(l)] -
                          lfact[static_cast<size_t>(j - l)] + l * ltau + (j - l) * lref;
      out.probs[static_cast<size_t>(l)] += pj * std::exp(lpmf);
    }
  }
  return out;
}

} // namespace photonsub
