#include "isodist/exact_real.hpp"

namespace isodist {

ExactReal ExactReal::make(const Rational& a, Sign s, const Rational& b) {
  if (b.sign() < 0) throw DomainError("make_exact: negative radicand " + b.to_string());
  if (auto root = rational_sqrt(b)) {
    return ExactReal(s == Sign::Plus ? a + *root : a - *root);
  }
  ExactReal out;
  out.v_ = Surd{a, s, b};
  return out;
}

ExactReal make_exact(const Rational& a, Sign s, const Rational& b) { return ExactReal::make(a, s, b); }

ExactReal ExactReal::from_quadratic(const Quadratic& q) {
  if (q.is_rational()) return ExactReal(q.x());
  return make(q.x(), sign_of(q.y().sign()), q.y() * q.y() * q.d());
}

const Rational& ExactReal::rational_part() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  return std::get<Surd>(v_).a;
}

Quadratic ExactReal::to_quadratic() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return Quadratic(*r);
  const Surd& s = std::get<Surd>(v_);
  return Quadratic(s.a, Rational(to_int(s.s)), s.b);
}

std::string ExactReal::to_string() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return r->to_string();
  const Surd& s = std::get<Surd>(v_);
  std::string out;
  if (!s.a.is_zero()) out = s.a.to_string();
  if (s.s == Sign::Minus) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  return out + "sqrt(" + s.b.to_string() + ")";
}

}  // namespace isodist
