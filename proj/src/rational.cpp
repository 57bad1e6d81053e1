#include "isodist/rational.hpp"

#include <utility>

namespace isodist {

Rational::Rational(long n, long d) : v_(n, d) {
  if (d == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
  if (d == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

mpz_class Rational::height() const {
  mpz_class n = ::abs(v_.get_num());
  return n > v_.get_den() ? n : v_.get_den();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational square(const Rational& r) { return r * r; }

Rational pow10(long k) {
  mpz_class p;
  const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return k < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
  return Rational(n, d);
}

bool is_rational_square(const Rational& r) {
  return r.sign() >= 0 && mpz_perfect_square_p(r.num().get_mpz_t()) &&
         mpz_perfect_square_p(r.den().get_mpz_t());
}

int height_compare(const Rational& a, const Rational& b) {
  const int c = cmp(a.height(), b.height());
  if (c != 0) return c < 0 ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace isodist
