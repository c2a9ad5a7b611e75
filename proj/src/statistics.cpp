#include "photonsub/statistics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "photonsub/channels.hpp"

namespace photonsub {

namespace {

MomentReport finish_report(double mean_n, double mean_n2, MomentRoute route) {
  MomentReport rep;
  rep.mean_n = mean_n;
  rep.mean_n2 = mean_n2;
  rep.variance = mean_n2 - mean_n * mean_n;
  if (rep.variance < 0.0) {
    if (rep.variance < -1e-9)
      throw std::runtime_error(
          "moments: variance below -1e-9; grid too small for this state");
    rep.variance = 0.0;
  }
  rep.route = route;
  if (mean_n > 1e-12) {
    rep.fano = rep.variance / mean_n;
    rep.fano_defined = true;
  } else {
    rep.fano = std::numeric_limits<double>::quiet_NaN();
    rep.fano_defined = false;
  }
  return rep;
}

} // namespace

MomentReport moments_from_wigner(const WignerField& field) {
  if (field.convention != WignerConvention::FockRoute)
    throw std::invalid_argument(
        "moments_from_wigner: field uses the coherent-route scaling; the phase-space "
        "moment formulas apply to the Fock-route convention only");
  const int n = field.grid.n_points;
  const auto q = field.grid.axis();
  std::vector<double> alpha(static_cast<size_t>(n) * n);
  std::vector<double> alpha2(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = q[static_cast<size_t>(i)] * q[static_cast<size_t>(i)] +
                       q[static_cast<size_t>(j)] * q[static_cast<size_t>(j)];
      alpha[static_cast<size_t>(i) * n + j] = a;
      alpha2[static_cast<size_t>(i) * n + j] = a * a;
    }
  const double s1 = field.integral_weighted(alpha);
  const double s2 = field.integral_weighted(alpha2);
  const double mean_n = 0.5 * s1 - 0.5;
  const double mean_n2 = 0.25 * s2 - 0.5 * s1;
  return finish_report(mean_n, mean_n2, MomentRoute::FromWigner);
}

MomentReport moments_from_fock(const FockDensity& rho) {
  return finish_report(rho.mean(), rho.second_moment(), MomentRoute::FromFock);
}

std::vector<FanoRow> fano_vs_lambda(int m, double eta, const std::vector<double>& lambdas,
                                    bool with_wigner_route) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0,1]");
  std::vector<FanoRow> rows;
  rows.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda >= 0.0)) throw std::invalid_argument("lambda values must be >= 0");
    const StateSpec spec = StateSpec::subtracted_tbs(m, lambda);
    FanoRow row;
    row.m = m;
    row.lambda = lambda;
    row.eta = eta;
    const FockDensity lossy = apply_loss(photon_number_distribution(spec), eta);
    const MomentReport exact = moments_from_fock(lossy);
    row.fano_exact = exact.fano;
    if (with_wigner_route) {
      const GridSpec grid = GridSpec::for_mean_photons(mean_photons(spec));
      const MomentReport measured =
          moments_from_wigner(wigner_subtracted_lossy(m, lambda, eta, grid));
      row.fano_wigner = measured.fano;
    } else {
      row.fano_wigner = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

double fano_crossover_lambda(int m, double tol) {
  if (m < 1) throw std::invalid_argument("fano_crossover_lambda: m must be >= 1");
  auto fano_exact = [m](double lambda) {
    const FockDensity rho =
        photon_number_distribution(StateSpec::subtracted_tbs(m, lambda));
    return moments_from_fock(rho).fano;
  };
  double lo = 1e-9, hi = 1.0;
  while (fano_exact(hi) < 1.0) hi *= 2.0; // super-Poissonian for large lambda
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (fano_exact(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace photonsub
