#include <cmath>

#include <doctest.h>

#include "photonsub/channels.hpp"
#include "photonsub/states.hpp"

using namespace photonsub;

namespace {

// Independent reference: direct binomial convolution with explicit factorials.
FockDensity brute_force_loss(const FockDensity& rho, double tau) {
  FockDensity out;
  out.dim = rho.dim;
  out.probs.assign(rho.probs.size(), 0.0);
  for (int j = 0; j < rho.dim; ++j)
    for (int l = 0; l <= j; ++l) {
      double choose = 1.0;
      for (int k = 0; k < l; ++k) choose = choose * (j - k) / (k + 1.0);
      out.probs[static_cast<size_t>(l)] += rho.probs[static_cast<size_t>(j)] * choose *
                                           std::pow(tau, l) * std::pow(1.0 - tau, j - l);
    }
  return out;
}

} // namespace

TEST_CASE("equivalent transmittance") {
  CHECK(equivalent_transmittance({0.0, 1.0}) == doctest::Approx(1.0));
  CHECK(equivalent_transmittance({1.0, 0.98}) == doctest::Approx(0.0));
  CHECK(equivalent_transmittance({0.5, 0.98}) == doctest::Approx(0.49));
  CHECK_THROWS(equivalent_transmittance({-0.1, 1.0}));
  CHECK_THROWS(equivalent_transmittance({0.5, 0.0}));
  CHECK_THROWS(equivalent_transmittance({0.5, 1.2}));
}

TEST_CASE("identity and single-photon beam splitter") {
  const FockDensity rho = photon_number_distribution(StateSpec::subtracted_tbs(2, 0.5));
  const FockDensity same = apply_loss(rho, 1.0);
  for (size_t i = 0; i < rho.probs.size(); ++i) CHECK(same.probs[i] == rho.probs[i]);

  const FockDensity one = photon_number_distribution(StateSpec::fock(1));
  const FockDensity half = apply_loss(one, 0.5);
  CHECK(half.probs[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(half.probs[1] == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS(apply_loss(one, 1.5));
  CHECK_THROWS(apply_loss(one, -0.1));
}

TEST_CASE("loss maps thermal to thermal with scaled mean") {
  const FockDensity in = photon_number_distribution(StateSpec::thermal(1.0));
  const FockDensity out = apply_loss(in, 0.3);
  const FockDensity ref = photon_number_distribution(StateSpec::thermal(0.3));
  for (size_t n = 0; n < std::min(out.probs.size(), ref.probs.size()); ++n)
    CHECK(out.probs[n] == doctest::Approx(ref.probs[n]).epsilon(1e-9));
  CHECK(out.mean() == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("matches brute-force convolution") {
  for (double tau : {0.2, 0.5, 0.98})
    for (int m : {0, 2}) {
      const FockDensity rho =
          photon_number_distribution(StateSpec::subtracted_tbs(m, 0.8));
      const FockDensity fast = apply_loss(rho, tau);
      const FockDensity slow = brute_force_loss(rho, tau);
      for (size_t n = 0; n < fast.probs.size(); ++n)
        CHECK(fast.probs[n] == doctest::Approx(slow.probs[n]).epsilon(1e-10));
    }
}

TEST_CASE("moment transformation laws") {
  for (int m : {0, 1, 3})
    for (double lambda : {0.05, 1.0})
      for (double tau : {0.25, 0.7}) {
        const FockDensity in =
            photon_number_distribution(StateSpec::subtracted_tbs(m, lambda));
        const FockDensity out = apply_loss(in, tau);
        CHECK(out.mean() == doctest::Approx(tau * in.mean()).epsilon(1e-9));
        CHECK(out.variance() ==
              doctest::Approx(tau * tau * in.variance() +
                              tau * (1.0 - tau) * in.mean())
                  .epsilon(1e-8));
        CHECK(out.total_mass() == doctest::Approx(in.total_mass()).epsilon(1e-12));
      }
}

TEST_CASE("composition depends only on the product of transmittances") {
  const FockDensity rho = photon_number_distribution(StateSpec::subtracted_tbs(2, 0.7));
  const FockDensity twice = apply_loss(apply_loss(rho, 0.8), 0.6);
  const FockDensity once = apply_loss(rho, 0.48);
  for (size_t n = 0; n < rho.probs.size(); ++n)
    CHECK(twice.probs[n] == doctest::Approx(once.probs[n]).epsilon(1e-10));
}
