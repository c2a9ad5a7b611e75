#include "photonsub/states.hpp"

#include <cmath>
#include <stdexcept>

namespace photonsub {

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::SubtractedTBS: return "subtracted_tbs";
    case StateKind::Thermal: return "thermal";
    case StateKind::Coherent: return "coherent";
    case StateKind::Fock: return "fock";
  }
  throw std::logic_error("unknown StateKind");
}

StateKind state_kind_from_string(const std::string& name) {
  if (name == "subtracted_tbs") return StateKind::SubtractedTBS;
  if (name == "thermal") return StateKind::Thermal;
  if (name == "coherent") return StateKind::Coherent;
  if (name == "fock") return StateKind::Fock;
  throw std::invalid_argument("unknown state kind: " + name);
}

void StateSpec::validate() const {
  if (m < 0) throw std::invalid_argument("m must be a non-negative integer");
  if (j < 0) throw std::invalid_argument("j must be a non-negative integer");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("lambda must be finite and >= 0");
  if (!(mu >= 0.0) || !std::isfinite(mu))
    throw std::invalid_argument("mu must be finite and >= 0");
}

StateSpec StateSpec::subtracted_tbs(int m, double lambda) {
  StateSpec s;
  s.kind = StateKind::SubtractedTBS;
  s.m = m;
  s.lambda = lambda;
  s.validate();
  return s;
}

StateSpec StateSpec::thermal(double lambda) {
  StateSpec s;
  s.kind = StateKind::Thermal;
  s.lambda = lambda;
  s.validate();
  return s;
}

StateSpec StateSpec::coherent(double mu) {
  StateSpec s;
  s.kind = StateKind::Coherent;
  s.mu = mu;
  s.validate();
  return s;
}

StateSpec StateSpec::fock(int j) {
  StateSpec s;
  s.kind = StateKind::Fock;
  s.j = j;
  s.validate();
  return s;
}

double FockDensity::total_mass() const {
  double sum = 0.0;
  for (double p : probs) sum += p;
  return sum;
}

double FockDensity::mean() const {
  double sum = 0.0;
  for (int n = 0; n < dim; ++n) sum += n * probs[static_cast<size_t>(n)];
  return sum;
}

double FockDensity::second_moment() const {
  double sum = 0.0;
  for (int n = 0; n < dim; ++n)
    sum += static_cast<double>(n) * n * probs[static_cast<size_t>(n)];
  return sum;
}

double FockDensity::variance() const {
  const double m1 = mean();
  return second_moment() - m1 * m1;
}

namespace {

// P(m+p) = (1-x)^{m+1} C(p+m, m) x^p. The term ratio x(p+m+1)/(p+1)
// decreases toward x < 1, so once it drops below 1 the remaining mass is
// bounded by a geometric series.
FockDensity subtracted_distribution(int m, double lambda, double tol) {
  constexpr int kMaxDim = 2'000'000;
  const double x = lambda / (1.0 + lambda);
  FockDensity rho;
  if (x == 0.0) {
    rho.dim = m + 1;
    rho.probs.assign(static_cast<size_t>(m) + 1, 0.0);
    rho.probs[static_cast<size_t>(m)] = 1.0;
    rho.tail_bound = 0.0;
    return rho;
  }
  rho.probs.assign(static_cast<size_t>(m), 0.0);
  double term = std::pow(1.0 - x, m + 1); // p = 0
  for (int p = 0;; ++p) {
    rho.probs.push_back(term);
    const double ratio = x * (p + m + 1) / (p + 1.0);
    if (ratio < 1.0) {
      const double bound = term * ratio / (1.0 - ratio);
      if (bound < tol) {
        rho.tail_bound = bound;
        break;
      }
    }
    if (static_cast<int>(rho.probs.size()) >= kMaxDim)
      throw std::runtime_error("photon_number_distribution: truncation bound not reached");
    term *= ratio;
  }
  rho.dim = static_cast<int>(rho.probs.size());
  return rho;
}

} // namespace

FockDensity photon_number_distribution(const StateSpec& spec, double tol) {
  spec.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  switch (spec.kind) {
    case StateKind::SubtractedTBS:
      return subtracted_distribution(spec.m, spec.lambda, tol);
    case StateKind::Thermal:
      return subtracted_distribution(0, spec.lambda, tol);
    case StateKind::Fock: {
      FockDensity rho;
      rho.dim = spec.j + 1;
      rho.probs.assign(static_cast<size_t>(spec.j) + 1, 0.0);
      rho.probs[static_cast<size_t>(spec.j)] = 1.0;
      return rho;
    }
    case StateKind::Coherent:
      throw std::invalid_argument(
          "photon_number_distribution: coherent states are off-diagonal and handled "
          "analytically in phasespace");
  }
  throw std::logic_error("unreachable");
}

double subtracted_state_norm(int m, double lambda) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (m == 0) return 1.0;
  if (!(lambda > 0.0))
    throw std::invalid_argument(
        "subtracted_state_norm: lambda must be > 0 when m > 0 (subtraction from a "
        "vacuum idler has zero success probability)");
  return std::exp(-0.5 * std::lgamma(m + 1.0) - 0.5 * m * std::log(lambda));
}

double mean_photons(const StateSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case StateKind::SubtractedTBS: return (spec.m + 1) * spec.lambda + spec.m;
    case StateKind::Thermal: return spec.lambda;
    case StateKind::Coherent: return spec.mu;
    case StateKind::Fock: return spec.j;
  }
  throw std::logic_error("unreachable");
}

} // namespace photonsub
