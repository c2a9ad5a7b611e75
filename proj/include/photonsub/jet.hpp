#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace photonsub {

/// Truncated Taylor polynomial (jet) arithmetic. A Jet of order k carries
/// coefficients c[0..k] of f(x0 + e) = sum_i c[i] e^i, so c[i] is the i-th
/// derivative of f at x0 divided by i!. Exact to machine precision; used by
/// the oracle for high-order derivatives of closed forms.
class Jet {
public:
  Jet(int order, double constant = 0.0) : c_(static_cast<size_t>(order) + 1, 0.0) {
    c_[0] = constant;
  }

  static Jet variable(int order, double value) {
    Jet j(order, value);
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  /// i-th derivative at the expansion point: i! * c[i].
  double derivative(int i) const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(double s, const Jet& a);
  friend Jet operator+(double s, const Jet& a);
  friend Jet operator-(double s, const Jet& a);

  /// Series reciprocal; requires a nonzero constant term.
  Jet reciprocal() const;
  Jet exp() const;

private:
  std::vector<double> c_;

  static void check_same_order(const Jet& a, const Jet& b);
};

} // namespace photonsub
