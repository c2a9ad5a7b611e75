#include "photonsub/phasespace.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

namespace photonsub {

namespace {

constexpr double kPi = std::numbers::pi;

// Scaled Laguerre recurrence for the lossy Fock Wigner values
//   T_j(alpha; tau) = e^{-alpha} (1-2 tau)^j L_j(2 tau alpha / (2 tau - 1)),
// so that pi * W_{|j>} = T_j. Folding the (1-2tau)^j prefactor into the
// three-term recurrence keeps every intermediate bounded by 1 and removes
// the 2tau-1 = 0 singularity: with c = 1-2tau and w = 2 tau alpha,
//   T_{j+1} = [ (c(2j+1) + w) T_j - c^2 j T_{j-1} ] / (j+1).
class ScaledFockWigner {
public:
  ScaledFockWigner(double tau, double alpha)
      : c_(1.0 - 2.0 * tau), w_(2.0 * tau * alpha), t_prev_(0.0),
        t_cur_(std::exp(-alpha)), j_(0) {}

  int order() const { return j_; }
  double value() const { return t_cur_; }

  void advance() {
    const double t_next =
        ((c_ * (2 * j_ + 1) + w_) * t_cur_ - c_ * c_ * j_ * t_prev_) / (j_ + 1);
    t_prev_ = t_cur_;
    t_cur_ = t_next;
    ++j_;
  }

  double value_at(int j) {
    while (j_ < j) advance();
    return t_cur_;
  }

private:
  double c_, w_;
  double t_prev_, t_cur_;
  int j_;
};

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("tau must lie in [0,1]");
}

} // namespace

void GridSpec::validate() const {
  if (!(q_max > 0.0)) throw std::invalid_argument("q_max must be > 0");
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("n_points must be odd and >= 3");
}

std::vector<double> GridSpec::axis() const {
  validate();
  std::vector<double> q(static_cast<size_t>(n_points));
  const double h = step();
  for (int i = 0; i < n_points; ++i) q[static_cast<size_t>(i)] = -q_max + h * i;
  return q;
}

std::vector<double> GridSpec::simpson_weights() const {
  validate();
  const double h = step();
  std::vector<double> w(static_cast<size_t>(n_points), 0.0);
  w.front() = w.back() = h / 3.0;
  for (int i = 1; i < n_points - 1; ++i)
    w[static_cast<size_t>(i)] = (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
  return w;
}

GridSpec GridSpec::for_mean_photons(double nbar, int n_points) {
  GridSpec g;
  g.q_max = std::max(6.0, 4.5 * std::sqrt(2.0 * std::max(nbar, 0.0) + 1.0));
  g.n_points = n_points;
  g.validate();
  return g;
}

double WignerField::integral() const {
  const auto w = grid.simpson_weights();
  const int n = grid.n_points;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += w[static_cast<size_t>(j)] * at(i, j);
    total += w[static_cast<size_t>(i)] * row;
  }
  return total;
}

double WignerField::integral_weighted(const std::vector<double>& point_weights) const {
  if (point_weights.size() != values.size())
    throw std::invalid_argument("integral_weighted: weight field size mismatch");
  const auto w = grid.simpson_weights();
  const int n = grid.n_points;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const size_t idx = static_cast<size_t>(i) * n + j;
      row += w[static_cast<size_t>(j)] * values[idx] * point_weights[idx];
    }
    total += w[static_cast<size_t>(i)] * row;
  }
  return total;
}

double WignerField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double wigner_fock_lossy(int j, double tau, double q, double p) {
  if (j < 0) throw std::invalid_argument("j must be >= 0");
  check_tau(tau);
  ScaledFockWigner rec(tau, q * q + p * p);
  return rec.value_at(j) / kPi;
}

double wigner_coherent_lossy(double mu, double tau, double q, double p) {
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be >= 0");
  check_tau(tau);
  const double root = std::sqrt(mu * tau);
  return (2.0 / kPi) * std::exp(-2.0 * (q * q + p * p - 2.0 * q * root + mu * tau));
}

WignerField wigner_subtracted_lossy(int m, double lambda, double tau,
                                    const GridSpec& grid, double tol) {
  check_tau(tau);
  // The photon-number distribution carries exactly the series coefficients
  // P(m+k) = (1-x)^{m+1} C(m+k,m) x^k and the truncation bound.
  const FockDensity rho =
      photon_number_distribution(StateSpec::subtracted_tbs(m, lambda), tol);

  WignerField field;
  field.grid = grid;
  field.convention = WignerConvention::FockRoute;
  const auto q = grid.axis();
  const int n = grid.n_points;
  field.values.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double qi = q[static_cast<size_t>(i)];
    for (int jj = 0; jj < n; ++jj) {
      const double pj = q[static_cast<size_t>(jj)];
      ScaledFockWigner rec(tau, qi * qi + pj * pj);
      double sum = 0.0;
      for (int fock = 0; fock < rho.dim; ++fock) {
        const double prob = rho.probs[static_cast<size_t>(fock)];
        if (prob != 0.0) sum += prob * rec.value();
        if (fock + 1 < rho.dim) rec.advance();
      }
      field.values[static_cast<size_t>(i) * n + jj] = sum / kPi;
    }
  }
  return field;
}

double wigner_subtracted_lossy_value(int m, double lambda, double tau, double q,
                                     double p, double tol) {
  check_tau(tau);
  const FockDensity rho =
      photon_number_distribution(StateSpec::subtracted_tbs(m, lambda), tol);
  ScaledFockWigner rec(tau, q * q + p * p);
  double sum = 0.0;
  for (int fock = 0; fock < rho.dim; ++fock) {
    const double prob = rho.probs[static_cast<size_t>(fock)];
    if (prob != 0.0) sum += prob * rec.value();
    if (fock + 1 < rho.dim) rec.advance();
  }
  return sum / kPi;
}

WignerField wigner_field(const StateSpec& spec, double tau, const GridSpec& grid,
                         double tol) {
  spec.validate();
  check_tau(tau);
  switch (spec.kind) {
    case StateKind::SubtractedTBS:
      return wigner_subtracted_lossy(spec.m, spec.lambda, tau, grid, tol);
    case StateKind::Thermal:
      return wigner_subtracted_lossy(0, spec.lambda, tau, grid, tol);
    case StateKind::Fock: {
      WignerField field;
      field.grid = grid;
      field.convention = WignerConvention::FockRoute;
      const auto q = grid.axis();
      const int n = grid.n_points;
      field.values.assign(static_cast<size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
          field.values[static_cast<size_t>(i) * n + jj] =
              wigner_fock_lossy(spec.j, tau, q[static_cast<size_t>(i)],
                                q[static_cast<size_t>(jj)]);
      return field;
    }
    case StateKind::Coherent: {
      WignerField field;
      field.grid = grid;
      field.convention = WignerConvention::CoherentRoute;
      const auto q = grid.axis();
      const int n = grid.n_points;
      field.values.assign(static_cast<size_t>(n) * n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
          field.values[static_cast<size_t>(i) * n + jj] =
              wigner_coherent_lossy(spec.mu, tau, q[static_cast<size_t>(i)],
                                    q[static_cast<size_t>(jj)]);
      return field;
    }
  }
  throw std::logic_error("unreachable");
}

double negativity_volume(const WignerField& field) {
  const double norm = field.integral();
  if (std::abs(norm - 1.0) > 1e-6)
    std::cerr << "warning: negativity_volume on a field with integral " << norm
              << " (expected 1); grid is likely too small\n";
  const auto w = field.grid.simpson_weights();
  const int n = field.grid.n_points;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += w[static_cast<size_t>(j)] * std::abs(field.at(i, j));
    total += w[static_cast<size_t>(i)] * row;
  }
  return total - 1.0;
}

std::vector<double> marginal_q(const WignerField& field) {
  const auto w = field.grid.simpson_weights();
  const int n = field.grid.n_points;
  std::vector<double> pr(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += w[static_cast<size_t>(j)] * field.at(i, j);
    // marginals are true densities; scrub quadrature-level negative dust
    if (row < 0.0 && row > -1e-10) row = 0.0;
    pr[static_cast<size_t>(i)] = row;
  }
  return pr;
}

} // namespace photonsub
