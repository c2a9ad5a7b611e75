#include "photonsub/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "photonsub/jet.hpp"

namespace photonsub::oracle {

namespace {
constexpr double kPi = std::numbers::pi;
}

double TwoModeAmplitudes::norm_squared() const {
  double s = 0.0;
  for (double a : amps) s += a * a;
  return s;
}

FockDensity TwoModeAmplitudes::reduced_signal(double tail_tol) const {
  FockDensity rho;
  rho.dim = m + n_max + 1;
  rho.probs.assign(static_cast<size_t>(rho.dim), 0.0);
  for (int n = 0; n <= n_max; ++n)
    rho.probs[static_cast<size_t>(m + n)] = amps[static_cast<size_t>(n)] *
                                            amps[static_cast<size_t>(n)];
  rho.tail_bound = std::max(0.0, 1.0 - norm_squared());
  if (rho.tail_bound > tail_tol)
    throw std::runtime_error("reduced_signal: truncated mass above tolerance");
  return rho;
}

TwoModeAmplitudes build_two_mode(int m, double lambda, int n_max) {
  if (m < 0 || n_max < 0) throw std::invalid_argument("build_two_mode: bad m or n_max");
  if (!(lambda >= 0.0)) throw std::invalid_argument("build_two_mode: bad lambda");
  TwoModeAmplitudes psi;
  psi.m = m;
  psi.lambda = lambda;
  psi.n_max = n_max;
  psi.amps.assign(static_cast<size_t>(n_max) + 1, 0.0);
  if (lambda == 0.0) {
    psi.amps[0] = 1.0;
    return psi;
  }
  // c_n = (1+lambda)^{-(m+1)/2} sqrt((m+n)!/(m! n!)) x^{n/2}, x = lambda/(1+lambda)
  const double lx = std::log(lambda / (1.0 + lambda));
  const double lpre = -0.5 * (m + 1) * std::log1p(lambda);
  for (int n = 0; n <= n_max; ++n) {
    const double lamp = lpre +
                        0.5 * (std::lgamma(m + n + 1.0) - std::lgamma(m + 1.0) -
                               std::lgamma(n + 1.0)) +
                        0.5 * n * lx;
    psi.amps[static_cast<size_t>(n)] = std::exp(lamp);
  }
  if (1.0 - psi.norm_squared() > 1e-12)
    throw std::runtime_error("build_two_mode: n_max leaves more than 1e-12 mass");
  return psi;
}

double derivative_route_wigner(int m, double lambda, double tau, double q, double p) {
  if (m < 0 || m > 6)
    throw std::invalid_argument("derivative_route_wigner: m must lie in 0..6");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0,1]");
  const double x0 = lambda / (1.0 + lambda);
  const double alpha = q * q + p * p;
  const double s = 2.0 * tau - 1.0;
  const Jet x = Jet::variable(m, x0);
  const Jet inv_denom = (1.0 + s * x).reciprocal();
  const Jet f = inv_denom * ((-alpha * ((1.0 - x) * inv_denom)).exp());
  // W = (1-x0)^{m+1} / (pi m!) * d^m f = (1-x0)^{m+1} / pi * coeff_m(f)
  return std::pow(1.0 - x0, m + 1) * f.coeff(m) / kPi;
}

double two_mode_route_wigner(int m, double lambda, double tau, double q, double p,
                             double tol) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0,1]");
  // Pick n_max from the geometric tail of |c_n|^2 ~ C(m+n,m) x^n.
  const double x = lambda / (1.0 + lambda);
  int n_max = m + 8;
  if (x > 0.0) {
    double term = std::pow(1.0 - x, m + 1);
    int n = 0;
    for (;; ++n) {
      const double ratio = x * (n + m + 1) / (n + 1.0);
      if (ratio < 1.0 && term * ratio / (1.0 - ratio) < tol * 1e-2) break;
      if (n > 1'000'000) throw std::runtime_error("two_mode_route_wigner: no truncation");
      term *= ratio;
    }
    n_max = n + 1;
  }
  const FockDensity rho = build_two_mode(m, lambda, n_max).reduced_signal(tol);

  // Independent binomial loss convolution.
  std::vector<double> lossy(rho.probs.size(), 0.0);
  if (tau == 1.0) {
    lossy = rho.probs;
  } else if (tau == 0.0) {
    double mass = 0.0;
    for (double pr : rho.probs) mass += pr;
    lossy[0] = mass;
  } else {
    const double ltau = std::log(tau);
    const double lref = std::log1p(-tau);
    for (int jph = 0; jph < rho.dim; ++jph) {
      const double pj = rho.probs[static_cast<size_t>(jph)];
      if (pj == 0.0) continue;
      for (int l = 0; l <= jph; ++l) {
        const double lpmf = std::lgamma(jph + 1.0) - std::lgamma(l + 1.0) -
                            std::lgamma(jph - l + 1.0) + l * ltau + (jph - l) * lref;
        lossy[static_cast<size_t>(l)] += pj * std::exp(lpmf);
      }
    }
  }

  // Lossless Fock-Wigner synthesis: W_l = (-1)^l e^{-a} L_l(2a) / pi.
  const double a = q * q + p * p;
  const double z = 2.0 * a;
  double l_prev = 0.0, l_cur = 1.0; // L_{-1}, L_0
  double sum = 0.0, sign = 1.0;
  for (int l = 0; l < static_cast<int>(lossy.size()); ++l) {
    sum += lossy[static_cast<size_t>(l)] * sign * l_cur;
    const double l_next = ((2 * l + 1 - z) * l_cur - l * l_prev) / (l + 1);
    l_prev = l_cur;
    l_cur = l_next;
    sign = -sign;
  }
  return std::exp(-a) * sum / kPi;
}

double exact_fock_loss_fisher(int j, double gamma, double eta) {
  if (j < 1) throw std::invalid_argument("exact_fock_loss_fisher: j must be >= 1");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("exact_fock_loss_fisher: gamma must lie in (0,1)");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("exact_fock_loss_fisher: eta must lie in (0,1]");
  const double tau = eta * (1.0 - gamma);
  const double spread = tau * (1.0 - tau);
  if (spread == 0.0)
    throw std::domain_error("exact_fock_loss_fisher: degenerate channel");
  return j * eta * eta / spread;
}

} // namespace photonsub::oracle
