#pragma once

#include <vector>

#include "photonsub/phasespace.hpp"
#include "photonsub/states.hpp"

namespace photonsub {

/// Fisher information for the absorption coefficient gamma, with the
/// provenance that produced it. The marginal route is the classical Fisher
/// information of the homodyne q distribution; the distribution route treats
/// the full two-dimensional quadrature quasi-distribution as the sampled
/// probability law (valid only where it is non-negative).
struct FisherEstimate {
  double gamma = 0.0;
  double eta = 1.0;
  StateSpec state;
  double fisher = 0.0;
  double dgamma_step = 0.0;
  GridSpec grid;
  double delta_gamma = 0.0;           // 1/sqrt(fisher)
  double richardson_rel_change = 0.0; // relative change under step halving
};

struct FisherOptions {
  double step = 0.0;        // 0 -> min(1e-3, gamma/10, (1-gamma)/10)
  double tol = 1e-12;       // series truncation tolerance
  double prob_floor = 1e-12; // marginal points below this are excluded
  bool richardson_check = true;
};

/// Central-difference Fisher information of the q-marginal at (gamma, eta).
FisherEstimate fisher_from_marginal(const StateSpec& state, double gamma, double eta,
                                    const GridSpec& grid, const FisherOptions& opts = {});

/// Central-difference Fisher information of the full (q, p) quadrature
/// quasi-distribution at (gamma, eta). Throws if the field has negative
/// regions; for the Fock route that restricts it to eta*(1 - gamma) <= 1/2.
FisherEstimate fisher_from_distribution(const StateSpec& state, double gamma, double eta,
                                        const GridSpec& grid,
                                        const FisherOptions& opts = {});

/// Shot-noise limit for a coherent probe: dgamma = sqrt((1-gamma)/(eta mu)).
double snl_delta_gamma(double mu, double gamma, double eta);

/// Ultimate quantum limit (asymptotic, high j) for a Fock probe:
/// dgamma = sqrt(gamma(1-gamma)/(eta j)).
double uql_delta_gamma(int j, double gamma, double eta);

struct FisherRow {
  StateKind state_kind = StateKind::SubtractedTBS;
  int m_or_j = 0;
  double lambda_or_mu = 0.0;
  double gamma = 0.0;
  double eta = 1.0;
  double fisher = 0.0;
  double delta_gamma = 0.0;
  double dgamma_step = 0.0;
};

/// Gamma sweep at fixed states (one row per state and gamma).
std::vector<FisherRow> qfi_sweep_gamma(const std::vector<StateSpec>& states, double eta,
                                       const std::vector<double>& gammas,
                                       const FisherOptions& opts = {}, int grid_points = 401);

/// Lambda sweep at fixed gamma: for each lambda, the m-subtracted states for
/// each m plus a coherent probe with mu = lambda.
std::vector<FisherRow> qfi_sweep_lambda(const std::vector<int>& ms, double gamma, double eta,
                                        const std::vector<double>& lambdas,
                                        const FisherOptions& opts = {}, int grid_points = 401);

} // namespace photonsub
