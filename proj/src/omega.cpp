#include "isodist/omega.hpp"

#include "isodist/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace isodist::omega {

namespace {

const Rational kOne(1);

Representation ordered(const Rational& a, const Rational& b, const Rational& value) {
  return a <= b ? Representation{a, b, value} : Representation{b, a, value};
}

bool rep_less(const Representation& a, const Representation& b) {
  if (int c = height_compare(a.p, b.p)) return c < 0;
  return height_compare(a.q, b.q) < 0;
}

}  // namespace

Rational omega_value(const Rational& p, const Rational& q) {
  if (p.sign() < 0 || q.sign() < 0) throw DomainError("omega_value needs p, q >= 0");
  return (p * p - kOne) * (q * q - kOne);
}

std::vector<Representation> search_representations(const Rational& omega, std::uint32_t bound,
                                                   kernels::Exec exec) {
  const std::vector<Rational> ps = rationals_by_height(bound, Rational(), Rational(static_cast<long>(bound)));
  const mpz_class limit(static_cast<unsigned long>(bound));
  auto body = [&](std::size_t i, std::vector<Representation>& slot) {
    const Rational& p = ps[i];
    const Rational p2m1 = p * p - kOne;
    if (p2m1.is_zero()) {
      if (!omega.is_zero()) return;
      for (const Rational& q : ps) slot.push_back(ordered(p, q, omega));
      return;
    }
    const auto q = rational_sqrt(kOne + omega / p2m1);
    if (!q || q->height() > limit) return;
    slot.push_back(ordered(p, *q, omega));
  };
  std::vector<Representation> out = kernels::collect<Representation>(ps.size(), body, exec);
  std::sort(out.begin(), out.end(), rep_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Representation> pythagorean_reps_of_one(std::size_t count) {
  std::vector<Representation> out;
  for (long m = 2; out.size() < count; ++m) {
    for (long n = 1; n < m && out.size() < count; ++n) {
      if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
      const Rational x(m * m - n * n);
      const Rational y(2 * m * n);
      const Rational z(m * m + n * n);
      out.push_back(ordered(z / x, z / y, omega_value(z / x, z / y)));
    }
  }
  return out;
}

}  // namespace isodist::omega
