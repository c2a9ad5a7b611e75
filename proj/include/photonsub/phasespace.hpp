#pragma once

#include <vector>

#include "photonsub/states.hpp"

namespace photonsub {

/// Symmetric rectangular (q,p) grid, origin on a node (n_points odd).
struct GridSpec {
  double q_max = 6.0;
  int n_points = 401;

  void validate() const;
  double step() const { return 2.0 * q_max / (n_points - 1); }
  std::vector<double> axis() const;
  /// Composite Simpson weights for one axis (n_points odd).
  std::vector<double> simpson_weights() const;

  /// Grid wide enough for a state of mean photon number nbar:
  /// q_max = max(6, 4.5*sqrt(2*nbar + 1)). The 4.5 multiple keeps the
  /// clipped tail of even the widest (thermal-like) envelope below 1e-9.
  static GridSpec for_mean_photons(double nbar, int n_points = 401);
};

/// Quadrature scaling convention of a sampled Wigner field. The Fock route
/// has vacuum peak 1/pi, the coherent closed form is printed with a 2/pi
/// prefactor; each is checked against its own form and they never mix.
enum class WignerConvention { FockRoute, CoherentRoute };

struct WignerField {
  GridSpec grid;
  std::vector<double> values; // row-major, values[i*n + j] = W(q_i, p_j)
  WignerConvention convention = WignerConvention::FockRoute;

  double at(int i, int j) const { return values[static_cast<size_t>(i) * grid.n_points + j]; }
  /// Simpson integral of W over the grid.
  double integral() const;
  /// Simpson integral of f(q,p)*W for a per-point weight field.
  double integral_weighted(const std::vector<double>& point_weights) const;
  double max_abs() const;
};

/// Wigner function of Fock state |j> after a transmittance-tau beam splitter,
/// W = (1-2tau)^j e^{-a} L_j(2 tau a/(2tau-1))/pi with a = q^2+p^2.
/// Evaluated through a scaled recurrence that is regular at tau = 1/2.
double wigner_fock_lossy(int j, double tau, double q, double p);

/// Lossy Wigner function of a coherent state with mean photons mu,
/// W = (2/pi) exp[-2(q^2+p^2-2q sqrt(mu tau)+mu tau)].
double wigner_coherent_lossy(double mu, double tau, double q, double p);

/// Lossy Wigner field of the m-photon-subtracted state, evaluated as the
/// Fock series (1-x)^{m+1} sum_k C(m+k,m) x^k W_{|m+k>}(tau; q,p) truncated
/// to residual mass below tol.
WignerField wigner_subtracted_lossy(int m, double lambda, double tau,
                                    const GridSpec& grid, double tol = 1e-12);

/// Pointwise value of the series route above.
double wigner_subtracted_lossy_value(int m, double lambda, double tau, double q,
                                     double p, double tol = 1e-12);

/// Field for any StateSpec under equivalent transmittance tau. Dispatches to
/// the series route (SubtractedTBS/Thermal), the pointwise Fock form, or the
/// coherent closed form.
WignerField wigner_field(const StateSpec& spec, double tau, const GridSpec& grid,
                         double tol = 1e-12);

/// Negative volume delta = integral |W| dq dp - 1 (zero for non-negative W).
/// Warns on stderr if the field is not normalized to 1e-6 before integrating.
double negativity_volume(const WignerField& field);

/// q-marginal Pr[q_i] = sum_j W(q_i,p_j) w_j; a genuine probability density.
std::vector<double> marginal_q(const WignerField& field);

} // namespace photonsub
