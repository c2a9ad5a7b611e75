#include <cmath>
#include <numbers>

#include <doctest.h>

#include "photonsub/channels.hpp"
#include "photonsub/phasespace.hpp"

using namespace photonsub;

namespace {

constexpr double kPi = std::numbers::pi;

double laguerre(int n, double z) {
  double prev = 0.0, cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2 * k + 1 - z) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Oracle: binomial loss on |j><j|, then a superposition of lossless Fock
// Wigner functions (-1)^l e^{-a} L_l(2a) / pi.
double lossy_fock_reference(int j, double tau, double q, double p) {
  FockDensity rho;
  rho.dim = j + 1;
  rho.probs.assign(static_cast<size_t>(j) + 1, 0.0);
  rho.probs[static_cast<size_t>(j)] = 1.0;
  const FockDensity out = apply_loss(rho, tau);
  const double a = q * q + p * p;
  double w = 0.0;
  for (int l = 0; l <= j; ++l)
    w += out.probs[static_cast<size_t>(l)] * ((l % 2 == 0 ? 1.0 : -1.0) / kPi) *
         std::exp(-a) * laguerre(l, 2.0 * a);
  return w;
}

} // namespace

TEST_CASE("grid spec") {
  GridSpec g;
  g.q_max = 5.0;
  g.n_points = 101;
  const auto q = g.axis();
  CHECK(q.front() == doctest::Approx(-5.0));
  CHECK(q.back() == doctest::Approx(5.0));
  CHECK(q[50] == doctest::Approx(0.0)); // origin is a node
  double wsum = 0.0;
  for (double w : g.simpson_weights()) wsum += w;
  CHECK(wsum == doctest::Approx(10.0).epsilon(1e-12));

  GridSpec bad;
  bad.n_points = 100;
  CHECK_THROWS(bad.validate());
  CHECK(GridSpec::for_mean_photons(0.0).q_max == doctest::Approx(6.0));
  CHECK(GridSpec::for_mean_photons(10.0).q_max ==
        doctest::Approx(4.5 * std::sqrt(21.0)));
}

TEST_CASE("lossy Fock Wigner pointwise values") {
  for (double tau : {0.0, 0.3, 0.5, 1.0})
    CHECK(wigner_fock_lossy(0, tau, 0.0, 0.0) == doctest::Approx(1.0 / kPi));
  CHECK(wigner_fock_lossy(1, 1.0, 0.0, 0.0) == doctest::Approx(-1.0 / kPi));
  // lossy |1> at tau = 1/2 is an even mixture, vanishing at the origin
  CHECK(wigner_fock_lossy(1, 0.5, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("lossy Fock Wigner matches the binomial-loss superposition") {
  for (int j : {1, 2, 5, 12})
    for (double tau : {0.2, 0.49, 0.5, 0.51, 0.98, 1.0})
      for (double q : {0.0, 0.7, 2.1})
        for (double p : {0.0, -1.3}) {
          const double got = wigner_fock_lossy(j, tau, q, p);
          const double ref = lossy_fock_reference(j, tau, q, p);
          CHECK(got == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        }
}

TEST_CASE("lossless Fock Wigner reduces to the Laguerre closed form") {
  for (int j : {0, 1, 4})
    for (double q : {0.0, 1.1}) {
      const double a = q * q;
      const double ref = ((j % 2 == 0 ? 1.0 : -1.0) / kPi) * std::exp(-a) *
                         laguerre(j, 2.0 * a);
      CHECK(wigner_fock_lossy(j, 1.0, q, 0.0) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("subtracted series: thermal closed form at m=0") {
  const double lambda = 0.01;
  const double x = lambda / (1.0 + lambda);
  const double w00 = wigner_subtracted_lossy_value(0, lambda, 1.0, 0.0, 0.0);
  CHECK(w00 == doctest::Approx((1.0 - x) / (kPi * (1.0 + x))).epsilon(1e-12));
  // general tau closed form: (1-x)/(1+x(2tau-1)) Gaussian
  for (double tau : {0.2, 0.5, 0.98})
    for (double q : {0.0, 1.0}) {
      const double denom = 1.0 + x * (2.0 * tau - 1.0);
      const double ref = (1.0 - x) / (kPi * denom) * std::exp(-q * q * (1.0 - x) / denom);
      CHECK(wigner_subtracted_lossy_value(0, lambda, tau, q, 0.0) ==
            doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("subtracted series: lambda -> 0 gives the Fock field") {
  const GridSpec grid = GridSpec::for_mean_photons(1.0, 101);
  const WignerField f = wigner_subtracted_lossy(1, 1e-9, 1.0, grid);
  CHECK(f.at(50, 50) == doctest::Approx(-1.0 / kPi).epsilon(1e-7));
  for (int i : {10, 30, 70})
    CHECK(f.at(i, 50) ==
          doctest::Approx(wigner_fock_lossy(1, 1.0, grid.axis()[static_cast<size_t>(i)], 0.0))
              .epsilon(1e-6));
}

TEST_CASE("coherent Wigner values") {
  CHECK(wigner_coherent_lossy(0.0, 0.7, 0.0, 0.0) == doctest::Approx(2.0 / kPi));
  CHECK(wigner_coherent_lossy(1.0, 1.0, 1.0, 0.0) == doctest::Approx(2.0 / kPi));
  // peak rides at q = sqrt(mu tau)
  CHECK(wigner_coherent_lossy(4.0, 0.25, 1.0, 0.0) == doctest::Approx(2.0 / kPi));
  CHECK(wigner_coherent_lossy(4.0, 0.25, 1.0, 0.5) <
        wigner_coherent_lossy(4.0, 0.25, 1.0, 0.0));
}

TEST_CASE("field invariants: normalization and Wigner bound") {
  for (int m : {0, 2})
    for (double lambda : {0.01, 1.0})
      for (double tau : {0.5, 1.0}) {
        const GridSpec grid = GridSpec::for_mean_photons((m + 1) * lambda + m);
        const WignerField f = wigner_subtracted_lossy(m, lambda, tau, grid);
        CHECK(f.integral() == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(f.max_abs() <= 1.0 / kPi + 1e-10);
      }
}

TEST_CASE("negativity volume") {
  const GridSpec grid = GridSpec::for_mean_photons(1.1);
  SUBCASE("coherent and thermal fields are classical") {
    const WignerField coh = wigner_field(StateSpec::coherent(1.0), 0.7, grid);
    CHECK(negativity_volume(coh) == doctest::Approx(0.0).epsilon(1e-8));
    const WignerField th = wigner_subtracted_lossy(0, 0.01, 0.98, grid);
    CHECK(negativity_volume(th) == doctest::Approx(0.0).epsilon(1e-8));
  }
  SUBCASE("monotone non-increasing in gamma") {
    for (int m : {1, 2}) {
      double prev = 1e9;
      for (double gamma : {0.0, 0.15, 0.3, 0.45, 0.6}) {
        const double tau = 0.98 * (1.0 - gamma);
        const double delta =
            negativity_volume(wigner_subtracted_lossy(m, 0.01, tau, grid));
        CHECK(delta <= prev + 1e-8);
        prev = delta;
      }
    }
  }
}

TEST_CASE("q-marginals") {
  const GridSpec grid = GridSpec::for_mean_photons(1.1, 401);
  const auto axis = grid.axis();
  const auto w = grid.simpson_weights();

  SUBCASE("coherent marginal matches the printed closed form") {
    const double mu = 1.0, tau = 0.49;
    const auto pr = marginal_q(wigner_field(StateSpec::coherent(mu), tau, grid));
    for (size_t i = 0; i < pr.size(); i += 25) {
      const double q = axis[i];
      const double ref = std::sqrt(2.0 / kPi) *
                         std::exp(-2.0 * q * q + 4.0 * q * std::sqrt(mu * tau) -
                                  2.0 * mu * tau);
      CHECK(pr[i] == doctest::Approx(ref).epsilon(1e-7).scale(1.0));
    }
  }
  SUBCASE("vacuum marginal in the coherent convention") {
    const auto pr = marginal_q(wigner_field(StateSpec::coherent(0.0), 1.0, grid));
    for (size_t i = 0; i < pr.size(); i += 50) {
      const double q = axis[i];
      CHECK(pr[i] == doctest::Approx(std::sqrt(2.0 / kPi) * std::exp(-2.0 * q * q))
                         .epsilon(1e-7)
                         .scale(1.0));
    }
  }
  SUBCASE("odd Fock state has a node at the origin") {
    const auto pr = marginal_q(wigner_field(StateSpec::fock(1), 1.0, grid));
    CHECK(pr[static_cast<size_t>(grid.n_points / 2)] ==
          doctest::Approx(0.0).epsilon(1e-10));
  }
  SUBCASE("marginals are non-negative and normalized even where W < 0") {
    const auto pr = marginal_q(wigner_subtracted_lossy(2, 0.01, 0.98, grid));
    double mass = 0.0;
    for (size_t i = 0; i < pr.size(); ++i) {
      CHECK(pr[i] >= 0.0);
      mass += w[i] * pr[i];
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  }
}
