#pragma once

#include <vector>

#include "photonsub/phasespace.hpp"
#include "photonsub/states.hpp"

namespace photonsub {

enum class MomentRoute { FromWigner, FromFock };

struct MomentReport {
  double mean_n = 0.0;
  double mean_n2 = 0.0;
  double variance = 0.0;
  double fano = 0.0; // NaN when mean_n is zero, see fano_defined
  bool fano_defined = false;
  MomentRoute route = MomentRoute::FromFock;
};

/// Photon-number moments from a phase-space field:
///   <n>   = (1/2) II (q^2+p^2) W - 1/2
///   <n^2> = (1/4) II (q^2+p^2)^2 W - (1/2) II (q^2+p^2) W
/// Variance is <n^2> - <n>^2. FockRoute convention only.
MomentReport moments_from_wigner(const WignerField& field);

/// Exact moments of a diagonal photon-number distribution.
MomentReport moments_from_fock(const FockDensity& rho);

struct FanoRow {
  int m = 0;
  double lambda = 0.0;
  double eta = 1.0;
  double fano_exact = 0.0;
  double fano_wigner = 0.0;
};

/// Fano factor of the m-subtracted state under detection loss only
/// (gamma = 0, tau = eta), exact Fock route and Wigner route per lambda.
std::vector<FanoRow> fano_vs_lambda(int m, double eta, const std::vector<double>& lambdas,
                                    bool with_wigner_route = true);

/// Sub-Poissonian crossover: the lambda where the exact-route Fano factor
/// crosses 1 at tau = 1, located by bisection on brute-force moments.
double fano_crossover_lambda(int m, double tol = 1e-6);

} // namespace photonsub
