#pragma once

#include "isodist/rational.hpp"

#include <string>

namespace isodist {

/// Element x + y*sqrt(d) of the field Q(sqrt d), d >= 0.
///
/// When d is a rational square the surd is folded into x, so y != 0 implies
/// sqrt(d) is irrational and the pair (x, y) is unique. Binary operations
/// require both operands to share d unless one of them is rational.
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(Rational x)  // NOLINT(google-explicit-constructor)
      : x_(std::move(x)) {}
  Quadratic(Rational x, Rational y, Rational d);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return y_.is_zero(); }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  /// Exact sign, -1, 0 or +1.
  int sign() const;

  Quadratic conjugate() const { return Quadratic(x_, -y_, d_); }
  /// x^2 - y^2 d
  Rational norm() const { return x_ * x_ - y_ * y_ * d_; }

  Quadratic operator-() const { return Quadratic(-x_, -y_, d_); }
  friend Quadratic operator+(const Quadratic& a, const Quadratic& b);
  friend Quadratic operator-(const Quadratic& a, const Quadratic& b);
  friend Quadratic operator*(const Quadratic& a, const Quadratic& b);
  friend Quadratic operator/(const Quadratic& a, const Quadratic& b);

  friend bool operator==(const Quadratic& a, const Quadratic& b) { return (a - b).is_zero(); }
  friend bool operator<(const Quadratic& a, const Quadratic& b) { return (a - b).sign() < 0; }
  friend bool operator<=(const Quadratic& a, const Quadratic& b) { return (a - b).sign() <= 0; }

  std::string to_string() const;

 private:
  static const Rational& common_d(const Quadratic& a, const Quadratic& b);

  Rational x_;
  Rational y_;
  Rational d_;
};

}  // namespace isodist
