#include "isodist/approx.hpp"

#include "isodist/radical_sum.hpp"

#include <utility>

namespace isodist {

namespace {

struct Digits {
  bool negative = false;
  std::string mantissa;  // exactly `digits` characters
  long exponent = 0;     // value = 0.mantissa * 10^exponent

  friend bool operator==(const Digits&, const Digits&) = default;
};

long decimal_size(const mpz_class& z) { return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 10)); }

/// Round-half-away-from-zero to `digits` significant digits.
Digits round_significant(const Rational& x, int digits) {
  Digits out;
  if (x.is_zero()) {
    out.mantissa.assign(static_cast<std::size_t>(digits), '0');
    out.exponent = 1;
    return out;
  }
  out.negative = x.sign() < 0;
  const Rational mag = abs(x);
  long e = decimal_size(mag.num()) - decimal_size(mag.den());
  while (pow10(e) <= mag) ++e;
  while (pow10(e - 1) > mag) --e;
  // 10^(e-1) <= mag < 10^e
  const Rational scaled = mag * pow10(digits - e);
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
  if (2 * r >= scaled.den()) ++q;
  if (Rational(q) >= pow10(digits)) {
    q /= 10;
    ++e;
  }
  out.mantissa = q.get_str();
  out.exponent = e;
  return out;
}

std::string layout(const Digits& d) {
  std::string body;
  const long n = static_cast<long>(d.mantissa.size());
  const bool all_zero = d.mantissa.find_first_not_of('0') == std::string::npos;
  if (all_zero) {
    body = "0";
    if (n > 1) body += "." + std::string(static_cast<std::size_t>(n - 1), '0');
    return body;
  }
  if (d.exponent <= 0) {
    body = "0." + std::string(static_cast<std::size_t>(-d.exponent), '0') + d.mantissa;
  } else if (d.exponent < n) {
    body = d.mantissa.substr(0, static_cast<std::size_t>(d.exponent)) + "." +
           d.mantissa.substr(static_cast<std::size_t>(d.exponent));
  } else {
    body = d.mantissa + std::string(static_cast<std::size_t>(d.exponent - n), '0');
  }
  return d.negative ? "-" + body : body;
}

void check_digits(int digits) {
  if (digits < 1 || digits > kMaxApproxDigits) {
    throw DomainError("approx: digits must be in [1, " + std::to_string(kMaxApproxDigits) + "]");
  }
}

/// Rational interval [lo, hi] containing constant + sum coeff*sqrt(radicand),
/// with each root bracketed to within 10^-k.
std::pair<Rational, Rational> enclose(const Rational& constant, const std::vector<RadicalTerm>& terms,
                                      long k) {
  Rational lo = constant;
  Rational hi = constant;
  const Rational unit = pow10(-k);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(2 * k));
  for (const RadicalTerm& t : terms) {
    // sqrt(n/d) = sqrt(n*d) / d
    const mpz_class nd = t.radicand.num() * t.radicand.den() * scale;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
    const Rational root_lo = Rational(s, t.radicand.den()) * unit;
    const Rational root_hi = Rational(mpz_class(s + 1), t.radicand.den()) * unit;
    if (t.coeff.sign() > 0) {
      lo += t.coeff * root_lo;
      hi += t.coeff * root_hi;
    } else {
      lo += t.coeff * root_hi;
      hi += t.coeff * root_lo;
    }
  }
  return {lo, hi};
}

std::string approx_terms(const Rational& constant, const std::vector<RadicalTerm>& terms, int digits) {
  check_digits(digits);
  if (terms.empty()) return layout(round_significant(constant, digits));
  for (long k = digits + 8;; k *= 2) {
    auto [lo, hi] = enclose(constant, terms, k);
    if (lo.sign() != hi.sign() || lo.is_zero()) continue;
    Digits a = round_significant(lo, digits);
    Digits b = round_significant(hi, digits);
    if (a == b) return layout(a);
  }
}

}  // namespace

std::string approx(const Rational& x, int digits) {
  check_digits(digits);
  return layout(round_significant(x, digits));
}

std::string approx(const Quadratic& x, int digits) {
  if (x.is_rational()) return approx(x.x(), digits);
  return approx_terms(x.x(), {{x.y(), x.d()}}, digits);
}

std::string approx(const ExactReal& x, int digits) { return approx(x.to_quadratic(), digits); }

std::string approx(const RadicalSum& x, int digits) {
  return approx_terms(x.rational_part(), x.terms(), digits);
}

int certified_sign(const RadicalSum& x) {
  if (x.terms().empty()) return x.rational_part().sign();
  for (long k = 8;; k *= 2) {
    auto [lo, hi] = enclose(x.rational_part(), x.terms(), k);
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
  }
}

}  // namespace isodist
