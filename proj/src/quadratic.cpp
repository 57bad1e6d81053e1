#include "isodist/quadratic.hpp"

#include <stdexcept>

namespace isodist {

Quadratic::Quadratic(Rational x, Rational y, Rational d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
  if (d_.sign() < 0) throw DomainError("negative radicand in Q(sqrt d)");
  if (y_.is_zero()) {
    d_ = Rational();
    return;
  }
  if (auto root = rational_sqrt(d_)) {
    x_ += y_ * *root;
    y_ = Rational();
    d_ = Rational();
  }
}

const Rational& Quadratic::common_d(const Quadratic& a, const Quadratic& b) {
  if (a.is_rational()) return b.d_;
  if (b.is_rational()) return a.d_;
  if (a.d_ != b.d_) throw std::logic_error("Quadratic operands live in different fields");
  return a.d_;
}

int Quadratic::sign() const {
  const int sx = x_.sign();
  const int sy = y_.sign();
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // opposite signs: compare x^2 with y^2 d
  const Rational lhs = x_ * x_;
  const Rational rhs = y_ * y_ * d_;
  if (lhs == rhs) return 0;  // unreachable for irrational sqrt(d)
  return lhs > rhs ? sx : sy;
}

Quadratic operator+(const Quadratic& a, const Quadratic& b) {
  const Rational& d = Quadratic::common_d(a, b);
  return Quadratic(a.x_ + b.x_, a.y_ + b.y_, d);
}

Quadratic operator-(const Quadratic& a, const Quadratic& b) {
  const Rational& d = Quadratic::common_d(a, b);
  return Quadratic(a.x_ - b.x_, a.y_ - b.y_, d);
}

Quadratic operator*(const Quadratic& a, const Quadratic& b) {
  const Rational& d = Quadratic::common_d(a, b);
  return Quadratic(a.x_ * b.x_ + a.y_ * b.y_ * d, a.x_ * b.y_ + a.y_ * b.x_, d);
}

Quadratic operator/(const Quadratic& a, const Quadratic& b) {
  if (b.is_zero()) throw DomainError("division by zero in Q(sqrt d)");
  const Rational n = b.norm();
  const Quadratic num = a * b.conjugate();
  return Quadratic(num.x_ / n, num.y_ / n, num.d_.is_zero() ? Quadratic::common_d(a, b) : num.d_);
}

std::string Quadratic::to_string() const {
  if (is_rational()) return x_.to_string();
  std::string out;
  if (!x_.is_zero()) out = x_.to_string();
  const Rational ay = abs(y_);
  if (y_.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (ay != Rational(1)) out += ay.to_string() + "*";
  out += "sqrt(" + d_.to_string() + ")";
  return out;
}

}  // namespace isodist
