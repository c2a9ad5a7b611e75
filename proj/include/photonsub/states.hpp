#pragma once

#include <string>
#include <vector>

namespace photonsub {

enum class StateKind { SubtractedTBS, Thermal, Coherent, Fock };

std::string to_string(StateKind kind);
StateKind state_kind_from_string(const std::string& name);

/// Symbolic description of a probe state. Only the parameters relevant to
/// `kind` are meaningful; the rest stay at their defaults.
struct StateSpec {
  StateKind kind = StateKind::SubtractedTBS;
  int m = 0;           // photons subtracted from the idler arm
  double lambda = 0.0; // mean photons per mode before subtraction
  double mu = 0.0;     // coherent mean photon number
  int j = 0;           // Fock photon number

  // Thermal coefficient x = lambda/(1+lambda), in [0,1).
  double thermal_x() const { return lambda / (1.0 + lambda); }

  void validate() const; // throws std::invalid_argument on bad parameters

  static StateSpec subtracted_tbs(int m, double lambda);
  static StateSpec thermal(double lambda);
  static StateSpec coherent(double mu);
  static StateSpec fock(int j);
};

/// Diagonal density operator in the photon-number basis, truncated at `dim`.
/// probs[n] = P(n) for n = 0..dim-1; tail_bound bounds the truncated mass.
struct FockDensity {
  int dim = 0;
  std::vector<double> probs;
  double tail_bound = 0.0;

  double total_mass() const;
  double mean() const;
  double second_moment() const;
  double variance() const;
};

/// Photon-number distribution of a diagonal state, truncated so that the
/// residual mass is below `tol`. Rejects Coherent (off-diagonal) specs.
FockDensity photon_number_distribution(const StateSpec& spec, double tol = 1e-12);

/// Normalization constant N^m = 1/(sqrt(m!) lambda^{m/2}) of the m-fold
/// subtracted twin-beam state. Validation helper for the two-mode amplitudes.
double subtracted_state_norm(int m, double lambda);

/// Closed-form mean photon number: (m+1)*lambda + m for the subtracted state,
/// lambda / mu / j for the baselines.
double mean_photons(const StateSpec& spec);

} // namespace photonsub
