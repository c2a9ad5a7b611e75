#include "photonsub/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace photonsub {

namespace {

double default_step(double gamma) {
  return std::min({1e-3, gamma / 10.0, (1.0 - gamma) / 10.0});
}

double marginal_fisher_once(const StateSpec& state, double gamma, double eta,
                            const GridSpec& grid, double step,
                            const FisherOptions& opts) {
  const double tau_plus = eta * (1.0 - (gamma + step));
  const double tau_minus = eta * (1.0 - (gamma - step));
  const auto pr_plus = marginal_q(wigner_field(state, tau_plus, grid, opts.tol));
  const auto pr_minus = marginal_q(wigner_field(state, tau_minus, grid, opts.tol));
  const auto w = grid.simpson_weights();

  double fisher = 0.0;
  double included_mass = 0.0;
  for (size_t i = 0; i < pr_plus.size(); ++i) {
    const double pr = 0.5 * (pr_plus[i] + pr_minus[i]);
    if (pr < opts.prob_floor) continue;
    const double dpr = (pr_plus[i] - pr_minus[i]) / (2.0 * step);
    fisher += w[i] * dpr * dpr / pr;
    included_mass += w[i] * pr;
  }
  if (included_mass < 1.0 - 1e-3)
    throw std::runtime_error(
        "fisher_from_marginal: marginal mass below the probability floor over a "
        "non-negligible region; grid does not cover the state");
  return fisher;
}

double distribution_fisher_once(const StateSpec& state, double gamma, double eta,
                                const GridSpec& grid, double step,
                                const FisherOptions& opts) {
  const WignerField f_plus = wigner_field(state, eta * (1.0 - (gamma + step)), grid, opts.tol);
  const WignerField f_minus = wigner_field(state, eta * (1.0 - (gamma - step)), grid, opts.tol);
  const auto w = grid.simpson_weights();
  const size_t n = static_cast<size_t>(grid.n_points);

  double fisher = 0.0;
  double included_mass = 0.0;
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const size_t idx = i * n + k;
      if (f_plus.values[idx] < -opts.prob_floor || f_minus.values[idx] < -opts.prob_floor)
        throw std::domain_error(
            "fisher_from_distribution: field has negative regions and cannot be "
            "read as a probability law (needs eta*(1 - gamma) <= 1/2)");
      const double pr = 0.5 * (f_plus.values[idx] + f_minus.values[idx]);
      if (pr < opts.prob_floor) continue;
      const double dpr = (f_plus.values[idx] - f_minus.values[idx]) / (2.0 * step);
      fisher += w[i] * w[k] * dpr * dpr / pr;
      included_mass += w[i] * w[k] * pr;
    }
  if (included_mass < 1.0 - 1e-3)
    throw std::runtime_error(
        "fisher_from_distribution: field mass below the probability floor over a "
        "non-negligible region; grid does not cover the state");
  return fisher;
}

double checked_step(const char* who, const StateSpec& state, double gamma, double eta,
                    const GridSpec& grid, const FisherOptions& opts) {
  state.validate();
  grid.validate();
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument(std::string(who) + ": gamma must lie in (0,1)");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument(std::string(who) + ": eta must lie in (0,1]");
  const double step = opts.step > 0.0 ? opts.step : default_step(gamma);
  if (!(gamma - step > 0.0 && gamma + step < 1.0))
    throw std::invalid_argument(std::string(who) + ": gamma +/- step leaves (0,1)");
  return step;
}

template <typename Once>
FisherEstimate fisher_estimate(const StateSpec& state, double gamma, double eta,
                               const GridSpec& grid, double step,
                               const FisherOptions& opts, Once once) {
  FisherEstimate est;
  est.gamma = gamma;
  est.eta = eta;
  est.state = state;
  est.grid = grid;
  est.dgamma_step = step;
  est.fisher = once(step);
  if (opts.richardson_check) {
    const double half = once(step / 2.0);
    est.richardson_rel_change =
        std::abs(half - est.fisher) / std::max(std::abs(half), 1e-300);
  }
  est.delta_gamma = est.fisher > 0.0 ? 1.0 / std::sqrt(est.fisher) : INFINITY;
  return est;
}

} // namespace

FisherEstimate fisher_from_marginal(const StateSpec& state, double gamma, double eta,
                                    const GridSpec& grid, const FisherOptions& opts) {
  const double step = checked_step("fisher_from_marginal", state, gamma, eta, grid, opts);
  return fisher_estimate(state, gamma, eta, grid, step, opts, [&](double h) {
    return marginal_fisher_once(state, gamma, eta, grid, h, opts);
  });
}

FisherEstimate fisher_from_distribution(const StateSpec& state, double gamma, double eta,
                                        const GridSpec& grid, const FisherOptions& opts) {
  const double step = checked_step("fisher_from_distribution", state, gamma, eta, grid, opts);
  return fisher_estimate(state, gamma, eta, grid, step, opts, [&](double h) {
    return distribution_fisher_once(state, gamma, eta, grid, h, opts);
  });
}

double snl_delta_gamma(double mu, double gamma, double eta) {
  if (!(mu > 0.0)) throw std::invalid_argument("snl_delta_gamma: mu must be > 0");
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("snl_delta_gamma: gamma must lie in [0,1)");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("snl_delta_gamma: eta must lie in (0,1]");
  return std::sqrt((1.0 - gamma) / (eta * mu));
}

double uql_delta_gamma(int j, double gamma, double eta) {
  if (j < 1) throw std::invalid_argument("uql_delta_gamma: j must be >= 1");
  if (!(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("uql_delta_gamma: gamma must lie in [0,1)");
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("uql_delta_gamma: eta must lie in (0,1]");
  return std::sqrt(gamma * (1.0 - gamma) / (eta * j));
}

namespace {

FisherRow make_row(const StateSpec& state, const FisherEstimate& est) {
  FisherRow row;
  row.state_kind = state.kind;
  switch (state.kind) {
    case StateKind::SubtractedTBS:
      row.m_or_j = state.m;
      row.lambda_or_mu = state.lambda;
      break;
    case StateKind::Thermal:
      row.m_or_j = 0;
      row.lambda_or_mu = state.lambda;
      break;
    case StateKind::Coherent:
      row.m_or_j = 0;
      row.lambda_or_mu = state.mu;
      break;
    case StateKind::Fock:
      row.m_or_j = state.j;
      row.lambda_or_mu = 0.0;
      break;
  }
  row.gamma = est.gamma;
  row.eta = est.eta;
  row.fisher = est.fisher;
  row.delta_gamma = est.delta_gamma;
  row.dgamma_step = est.dgamma_step;
  return row;
}

} // namespace

std::vector<FisherRow> qfi_sweep_gamma(const std::vector<StateSpec>& states, double eta,
                                       const std::vector<double>& gammas,
                                       const FisherOptions& opts, int grid_points) {
  std::vector<FisherRow> rows;
  rows.reserve(states.size() * gammas.size());
  for (const StateSpec& state : states) {
    const GridSpec grid =
        GridSpec::for_mean_photons(eta * mean_photons(state), grid_points);
    for (double gamma : gammas)
      rows.push_back(make_row(state, fisher_from_marginal(state, gamma, eta, grid, opts)));
  }
  return rows;
}

std::vector<FisherRow> qfi_sweep_lambda(const std::vector<int>& ms, double gamma,
                                        double eta, const std::vector<double>& lambdas,
                                        const FisherOptions& opts, int grid_points) {
  std::vector<FisherRow> rows;
  rows.reserve((ms.size() + 1) * lambdas.size());
  for (double lambda : lambdas) {
    for (int m : ms) {
      const StateSpec state = StateSpec::subtracted_tbs(m, lambda);
      const GridSpec grid =
          GridSpec::for_mean_photons(eta * mean_photons(state), grid_points);
      rows.push_back(make_row(state, fisher_from_marginal(state, gamma, eta, grid, opts)));
    }
    const StateSpec probe = StateSpec::coherent(lambda);
    const GridSpec grid =
        GridSpec::for_mean_photons(eta * mean_photons(probe), grid_points);
    rows.push_back(make_row(probe, fisher_from_marginal(probe, gamma, eta, grid, opts)));
  }
  return rows;
}

} // namespace photonsub
