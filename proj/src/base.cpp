#include "isodist/base.hpp"

#include "isodist/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace isodist::base {

namespace {

const Rational kZero;
const Rational kOne(1);
const Rational kTwo(2);
const Rational kFour(4);

ExactReal plus_one(const ExactReal& x) {
  if (x.is_rational()) return ExactReal(x.rational() + kOne);
  const Surd& s = x.surd();
  return make_exact(s.a + kOne, s.s, s.b);
}

RadicalSum signed_root(Sign s, const Rational& square) {
  return RadicalSum::radical(Rational(to_int(s)), square);
}

}  // namespace

BaseTriangle::BaseTriangle(RadicalSum phi) : phi_(std::move(phi)) {
  if (phi_.component_count() > 2) throw DomainError("altitude must have at most two components");
  if (phi_.sign() < 0) throw DomainError("altitude must be nonnegative, got " + phi_.to_string());
  theta_sq_ = plus_one(phi_.square());
}

std::optional<BaseTriangle> BaseTriangle::from_theta_sq(const ExactReal& theta_sq) {
  if ((theta_sq.to_quadratic() - Quadratic(kOne)).sign() < 0) {
    throw DomainError("base triangle needs theta^2 >= 1, got " + theta_sq.to_string());
  }
  if (theta_sq.is_rational()) return BaseTriangle(RadicalSum::radical(kOne, theta_sq.rational() - kOne));
  // Phi^2 = x + s sqrt(y); sqrt(x + s sqrt(y)) = sqrt((x+z)/2) + s sqrt((x-z)/2), z^2 = x^2 - y
  const Surd& sd = theta_sq.surd();
  const Rational x = sd.a - kOne;
  const auto z = rational_sqrt(x * x - sd.b);
  if (!z || x.sign() <= 0) return std::nullopt;
  RadicalSum phi = RadicalSum::radical(kOne, (x + *z) / kTwo) + signed_root(sd.s, (x - *z) / kTwo);
  BaseTriangle t(std::move(phi));
  if (t.theta_sq() != theta_sq) throw std::logic_error("denesting did not reproduce theta^2");
  return t;
}

Rational BaseWitness::e() const { return (p * p - kOne) * (kOne - q * q); }

Rational BaseWitness::f() const { return r * r - p * p * q * q; }

void BaseWitness::validate() const {
  if (p < kOne || q > kOne || q.sign() < 0) throw DomainError("base witness needs p >= 1 >= q >= 0");
  if (r < p * q) throw DomainError("base witness needs r >= pq");
}

RadicalSum BaseWitness::altitude() const { return signed_root(eps, e()) + signed_root(eps_prime, f()); }

bool verify_witness(const BaseTriangle& t, const BaseWitness& w) {
  try {
    w.validate();
  } catch (const DomainError&) {
    return false;
  }
  return w.altitude() == t.phi();
}

std::vector<BasePoint> construct_points(const BaseTriangle& t, const BaseWitness& w) {
  if (!verify_witness(t, w)) {
    throw DomainError("witness does not realize the altitude " + t.phi().to_string());
  }
  const Rational pq = w.p * w.q;
  const Rational e = w.e();
  const RadicalSum y0 = signed_root(w.eps, e);
  const Rational plus = abs(w.p + w.q);
  const Rational minus = abs(w.p - w.q);
  std::vector<BasePoint> out;
  out.push_back(BasePoint{pq, e, y0, w.r, plus, minus});
  if (!pq.is_zero()) out.push_back(BasePoint{-pq, e, y0, w.r, minus, plus});
  return out;
}

std::uint64_t lemma31_min_n(const Rational& f) {
  if (f.sign() <= 0) throw DomainError("lemma31_min_n needs f > 0");
  // ceil(2 d / n) for f = n/d
  mpz_class n;
  const mpz_class twice = 2 * f.den();
  mpz_cdiv_q(n.get_mpz_t(), twice.get_mpz_t(), f.num().get_mpz_t());
  if (n < 1) n = 1;
  if (!n.fits_ulong_p()) throw DomainError("N too large for f = " + f.to_string());
  return n.get_ui();
}

BaseWitness lemma31_witness(const Rational& f, std::uint64_t n) {
  const Rational nn(mpz_class(static_cast<unsigned long>(n)));
  const Rational nf = nn * f;
  if (nf < kTwo) throw DomainError("lemma31_witness needs N f >= 2");
  const Rational shift = kOne / (kFour * nn);
  return BaseWitness{nf - shift, kOne, nf + shift, Sign::Plus, Sign::Plus};
}

std::vector<BasePoint> lemma31_points(const BaseTriangle& t, std::uint64_t n) {
  const ExactReal f2 = t.phi().square();
  if (!f2.is_rational() || f2.rational().sign() <= 0) {
    throw DomainError("lemma31_points needs rational Phi^2 > 0");
  }
  if (n == 0) throw DomainError("N must be positive");
  const Rational f = f2.rational();
  const BaseWitness w = lemma31_witness(f, n);
  std::vector<BasePoint> out;
  for (const Rational& x0 : {w.p, -w.p}) {
    out.push_back(BasePoint{x0, kZero, RadicalSum(), w.r, abs(x0 + kOne), abs(x0 - kOne)});
  }
  return out;
}

BaseWitness extract_witness(const Rational& x0, const Rational& e, const Rational& R, const Rational& S,
                            const Rational& r, const BaseTriangle& t) {
  if (e.sign() < 0) throw DomainError("e = y0^2 must be nonnegative");
  if (e.is_zero()) {
    throw DomainError("e = 0: the point lies on BC; use the rational-altitude route (lemma31)");
  }
  if (square(x0 + kOne) + e != R * R) throw DomainError("(x0+1)^2 + e != R^2");
  if (square(x0 - kOne) + e != S * S) throw DomainError("(x0-1)^2 + e != S^2");
  if (r * r < x0 * x0) throw DomainError("r^2 - x0^2 must be nonnegative");

  const Rational alpha = S - (x0 - kOne);
  const Rational beta = R - (x0 + kOne);
  if (alpha.is_zero() || beta.is_zero()) throw std::logic_error("alpha, beta vanish although e != 0");
  const Rational delta = alpha - beta;
  const Rational gamma = alpha * beta;
  if (delta.is_zero()) throw std::logic_error("alpha == beta contradicts the distance equations");
  const auto eps = rational_sqrt(delta * delta + kFour * gamma);
  if (!eps) throw DomainError("discriminant delta^2 + 4 gamma is not a rational square");

  Rational p = *eps / delta;
  Rational q = kOne - delta / kTwo;
  if (abs(p) == kOne || abs(q) == kOne) throw std::logic_error("p or q is +-1 although e != 0");
  if ((p * p - kOne) * (kOne - q * q) != e) throw std::logic_error("e != (p^2-1)(1-q^2)");
  if (abs(p * q) != abs(x0)) throw std::logic_error("|pq| != |x0|");

  p = abs(p);
  q = abs(q);
  if (p < kOne) std::swap(p, q);
  const Rational rr = abs(r);
  for (Sign s1 : {Sign::Plus, Sign::Minus}) {
    for (Sign s2 : {Sign::Plus, Sign::Minus}) {
      BaseWitness w{p, q, rr, s1, s2};
      if (verify_witness(t, w)) return w;
    }
  }
  throw DomainError("no sign choice makes the witness match the altitude " + t.phi().to_string());
}

bool check_point(const BaseTriangle& t, const BasePoint& m) {
  if (m.dist_a.sign() < 0 || m.dist_b.sign() < 0 || m.dist_c.sign() < 0) return false;
  if (square(m.x0 + kOne) + m.e != square(m.dist_b)) return false;
  if (square(m.x0 - kOne) + m.e != square(m.dist_c)) return false;
  const ExactReal y2 = m.y0.square();
  if (!y2.is_rational() || y2.rational() != m.e) return false;
  const RadicalSum dy = t.phi() - m.y0;
  return RadicalSum(m.x0 * m.x0) + dy * dy == RadicalSum(square(m.dist_a));
}

std::vector<Component> components(const RadicalSum& phi) {
  std::vector<Component> out;
  for (const RadicalTerm& term : phi.terms()) {
    out.push_back({sign_of(term.coeff.sign()), term.coeff * term.coeff * term.radicand});
  }
  if (!phi.rational_part().is_zero()) {
    out.push_back({sign_of(phi.rational_part().sign()), square(phi.rational_part())});
  }
  return out;
}

std::array<RadicalSum, 2> locus_lines(const BaseTriangle& t) {
  if (t.theta_sq().is_rational()) throw DomainError("locus_lines needs irrational theta^2");
  const auto comps = components(t.phi());
  if (comps.size() != 2) throw std::logic_error("irrational theta^2 with a one-component altitude");
  return {signed_root(comps[0].sign, comps[0].square), signed_root(comps[1].sign, comps[1].square)};
}

bool witness_less(const BaseWitness& a, const BaseWitness& b) {
  if (int c = height_compare(a.p, b.p)) return c < 0;
  if (int c = height_compare(a.q, b.q)) return c < 0;
  if (int c = height_compare(a.r, b.r)) return c < 0;
  if (a.eps != b.eps) return a.eps == Sign::Plus;
  if (a.eps_prime != b.eps_prime) return a.eps_prime == Sign::Plus;
  return false;
}

std::vector<BaseWitness> search_witnesses(const BaseTriangle& t, std::uint32_t bound, kernels::Exec exec) {
  if (t.theta_sq().is_rational()) throw DomainError("witness search is for irrational theta^2");
  const auto comps = components(t.phi());
  if (comps.size() != 2) throw std::logic_error("irrational theta^2 with a one-component altitude");
  std::vector<Rational> ps = rationals_by_height(bound, kOne, Rational(static_cast<long>(bound)));
  std::erase(ps, kOne);
  const mpz_class limit(static_cast<unsigned long>(bound));

  auto body = [&](std::size_t i, std::vector<BaseWitness>& slot) {
    const Rational& p = ps[i];
    const Rational p2m1 = p * p - kOne;
    for (int k = 0; k < 2; ++k) {
      const Component& ec = comps[static_cast<std::size_t>(k)];
      const Component& fc = comps[static_cast<std::size_t>(1 - k)];
      const auto q = rational_sqrt(kOne - ec.square / p2m1);
      if (!q || q->height() > limit) continue;
      const auto r = rational_sqrt(fc.square + p * p * *q * *q);
      if (!r || r->height() > limit) continue;
      BaseWitness w{p, *q, *r, ec.sign, fc.sign};
      if (!verify_witness(t, w)) throw std::logic_error("search produced a non-verifying witness");
      slot.push_back(std::move(w));
    }
  };
  std::vector<BaseWitness> out = kernels::collect<BaseWitness>(ps.size(), body, exec);
  std::sort(out.begin(), out.end(), witness_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decision decide(const ExactReal& theta_sq, std::uint32_t height, kernels::Exec exec) {
  if ((theta_sq.to_quadratic() - Quadratic(kOne)).sign() < 0) {
    throw DomainError("base triangle needs theta^2 >= 1, got " + theta_sq.to_string());
  }
  if (theta_sq.is_rational()) {
    const Rational f = theta_sq.rational() - kOne;
    if (f.is_zero()) return RationalRoute{0, BaseWitness{kOne, kOne, kOne, Sign::Plus, Sign::Plus}};
    const std::uint64_t n = lemma31_min_n(f);
    return RationalRoute{n, lemma31_witness(f, n)};
  }
  const auto t = BaseTriangle::from_theta_sq(theta_sq);
  if (!t) {
    return NotSuitable{"Phi^2 = x +- sqrt(y) with x^2 - y not a rational square: Phi is not +-sqrt(e) +- "
                       "sqrt(f) for rational e, f"};
  }
  const auto found = search_witnesses(*t, height, exec);
  if (found.empty()) return UnknownUpTo{height};
  return Found{found.front(), found.size()};
}

}  // namespace isodist::base
