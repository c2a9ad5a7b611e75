#include "photonsub/jet.hpp"

namespace photonsub {

void Jet::check_same_order(const Jet& a, const Jet& b) {
  if (a.c_.size() != b.c_.size())
    throw std::invalid_argument("Jet: mixed truncation orders");
}

double Jet::derivative(int i) const {
  if (i < 0 || i > order()) throw std::out_of_range("Jet::derivative: bad order");
  double fact = 1.0;
  for (int k = 2; k <= i; ++k) fact *= k;
  return fact * c_[static_cast<size_t>(i)];
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet::check_same_order(a, b);
  Jet out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet::check_same_order(a, b);
  Jet out = a;
  for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet::check_same_order(a, b);
  Jet out(a.order());
  for (size_t i = 0; i < out.c_.size(); ++i) {
    double s = 0.0;
    for (size_t k = 0; k <= i; ++k) s += a.c_[k] * b.c_[i - k];
    out.c_[i] = s;
  }
  return out;
}

Jet operator*(double s, const Jet& a) {
  Jet out = a;
  for (double& c : out.c_) c *= s;
  return out;
}

Jet operator+(double s, const Jet& a) {
  Jet out = a;
  out.c_[0] += s;
  return out;
}

Jet operator-(double s, const Jet& a) {
  Jet out = -1.0 * a;
  out.c_[0] += s;
  return out;
}

Jet Jet::reciprocal() const {
  if (c_[0] == 0.0)
    throw std::domain_error("Jet::reciprocal: zero constant term");
  Jet out(order());
  out.c_[0] = 1.0 / c_[0];
  for (size_t i = 1; i < c_.size(); ++i) {
    double s = 0.0;
    for (size_t k = 1; k <= i; ++k) s += c_[k] * out.c_[i - k];
    out.c_[i] = -s / c_[0];
  }
  return out;
}

Jet Jet::exp() const {
  Jet out(order());
  out.c_[0] = std::exp(c_[0]);
  // h = exp(f)  =>  k h_k = sum_{i=1}^{k} i f_i h_{k-i}
  for (size_t k = 1; k < c_.size(); ++k) {
    double s = 0.0;
    for (size_t i = 1; i <= k; ++i) s += static_cast<double>(i) * c_[i] * out.c_[k - i];
    out.c_[k] = s / static_cast<double>(k);
  }
  return out;
}

} // namespace photonsub
