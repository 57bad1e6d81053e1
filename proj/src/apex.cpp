#include "isodist/apex.hpp"

#include "isodist/enumerate.hpp"

#include <stdexcept>

namespace isodist::apex {

namespace {

const Rational kZero;
const Rational kOne(1);
const Rational kTwo(2);
const Rational kFour(4);

Quadratic q(const Rational& r) { return Quadratic(r); }

}  // namespace

ApexTriangle::ApexTriangle(ExactReal theta_sq) : theta_sq_(std::move(theta_sq)) {
  const Quadratic v = theta_sq_.to_quadratic();
  if (v.sign() < 0 || (v - q(kFour)).sign() > 0) {
    throw DomainError("apex triangle needs 0 <= theta^2 <= 4, got " + theta_sq_.to_string());
  }
}

bool ApexTriangle::degenerate() const {
  return theta_sq_ == ExactReal(kZero) || theta_sq_ == ExactReal(kFour);
}

Quadratic ApexTriangle::cos_apex() const {
  const Quadratic v = theta_sq_.to_quadratic();
  return Quadratic(kOne - v.x() / kTwo, -v.y() / kTwo, v.d());
}

void ApexWitness::validate() const {
  if (abs(p) > kOne || abs(q) > kOne) {
    throw DomainError("apex witness needs -1 <= p, q <= 1");
  }
}

ExactReal ApexWitness::realize() const {
  validate();
  return make_exact(kTwo + kTwo * p * q, s, kFour * (kOne - p * p) * (kOne - q * q));
}

std::string to_string(Route r) { return r == Route::RationalCase ? "rational" : "surd"; }

std::string to_string(Failure f) {
  switch (f) {
    case Failure::NegativeDiscriminant:
      return "negative-discriminant";
    case Failure::IrrationalRoots:
      return "irrational-roots";
    case Failure::RootOutOfRange:
      return "root-outside-unit-interval";
    case Failure::RootNotSquare:
      return "root-not-a-square";
  }
  return "unknown";
}

Trinomial apex_trinomial(const Rational& A, const Rational& B) {
  const Rational shifted = square(A - kTwo);
  return Trinomial{(shifted + kFour - B) / kFour, shifted / kFour};
}

Decision decide(const ApexTriangle& t) {
  const ExactReal& ts = t.theta_sq();
  if (ts == ExactReal(kZero)) return Suitable{{kOne, Rational(-1), Sign::Plus}, Route::RationalCase};
  if (ts == ExactReal(kFour)) return Suitable{{kOne, kOne, Sign::Plus}, Route::RationalCase};
  if (ts.is_rational()) {
    // radical vanishes with q = 1, and 2(1 + p) = theta^2
    return Suitable{{ts.rational() / kTwo - kOne, kOne, Sign::Plus}, Route::RationalCase};
  }

  const Surd& sd = ts.surd();
  const Trinomial f = apex_trinomial(sd.a, sd.b);
  NotSuitable no{Failure::NegativeDiscriminant, f, {}};
  const Rational disc = f.discriminant();
  if (disc.sign() < 0) return no;
  const auto root = rational_sqrt(disc);
  if (!root) {
    no.reason = Failure::IrrationalRoots;
    return no;
  }
  const Rational lo = (f.linear - *root) / kTwo;
  const Rational hi = (f.linear + *root) / kTwo;
  no.roots = {lo, hi};
  if (lo.sign() < 0 || hi > kOne) {
    no.reason = Failure::RootOutOfRange;
    return no;
  }
  const auto p = rational_sqrt(hi);
  const auto q_mag = rational_sqrt(lo);
  if (!p || !q_mag) {
    no.reason = Failure::RootNotSquare;
    return no;
  }
  // hi == 0 would force B == 4, a rational radical
  const Rational q = (sd.a - kTwo) / (kTwo * *p);
  ApexWitness w{*p, q, sd.s};
  if (w.realize() != ts) throw std::logic_error("decide: witness does not regenerate theta^2");
  return Suitable{w, Route::SurdCase};
}

ApexFrame frame_for_rational(const Rational& a) {
  if (abs(a) > kOne) throw DomainError("cosine outside [-1, 1]");
  return ApexFrame{RadicalSum(a), RadicalSum::radical(kOne, kOne - a * a)};
}

ApexFrame frame_for_witness(const ApexWitness& w) {
  w.validate();
  const Rational p = -w.p;
  const Rational& qq = w.q;
  const Sign s = flip(w.s);
  const Rational rp = kOne - p * p;
  const Rational rq = kOne - qq * qq;
  const RadicalSum a = RadicalSum(p * qq) + RadicalSum::radical(Rational(to_int(s)), rp * rq);
  RadicalSum b = RadicalSum::radical(qq, rp) - RadicalSum::radical(Rational(to_int(s)) * p, rq);
  if (b.sign() < 0) b = -b;
  return ApexFrame{a, b};
}

std::vector<Rational> default_psi_sweep(const Rational& a, std::size_t count) {
  std::vector<Rational> out;
  SternBrocotWalk walk;
  while (out.size() < count) {
    Rational psi = walk.next();
    if (psi == a || abs(psi) == kOne) continue;
    out.push_back(std::move(psi));
  }
  return out;
}

std::vector<ApexCertificate> lemma21_points(const ApexTriangle& t, std::span<const Rational> psis) {
  if (!t.theta_sq().is_rational()) throw DomainError("lemma21_points needs rational theta^2");
  const Rational a = kOne - t.theta_sq().rational() / kTwo;
  std::vector<ApexCertificate> out;
  out.reserve(psis.size());
  for (const Rational& psi : psis) {
    if (psi == a || abs(psi) == kOne) {
      throw DomainError("psi must avoid {a, 1, -1}; got " + psi.to_string());
    }
    const Rational denom = kTwo * (psi - a);
    const Rational x = (psi * psi - kOne) / denom;
    const Rational mc = (psi * psi - kTwo * a * psi + kOne) / denom;
    ApexCertificate c;
    c.R = abs(x);
    c.S = abs(x - kOne);
    c.T = abs(mc);
    c.u = (c.R * c.R - c.S * c.S + kOne) / kTwo;
    c.v = (c.R * c.R - c.T * c.T + kOne) / kTwo;
    c.coord_x = x;
    c.coord_y = RadicalSum();
    c.on_line_ab = true;
    out.push_back(std::move(c));
  }
  return out;
}

Rst lemma22_rst(const Rational& p, const Rational& q) {
  const Rational sum = p + q;
  if (sum.is_zero()) throw DomainError("lemma22_rst needs p + q != 0");
  if (abs(p - q) == kTwo) throw DomainError("lemma22_rst needs |p - q| != 2");
  const Rational den = kFour * sum;
  const Rational pq2 = kTwo * p * q;
  return Rst{(kFour - square(p - q)) / den, (kFour + pq2 - Rational(3) * p * p + q * q) / den,
             (kFour + pq2 + p * p - Rational(3) * q * q) / den};
}

bool relation_one_holds(const Rational& R, const Rational& u, const Rational& v, const Quadratic& a) {
  const Rational R2 = R * R;
  const Quadratic lhs = q(R2) * a * a + q(u * u + v * v);
  const Quadratic rhs = q(R2) + q(kTwo * u * v) * a;
  return lhs == rhs;
}

std::vector<ApexCertificate> construct_points(const ApexTriangle& t, const ApexWitness& w,
                                              std::size_t sweep_count) {
  w.validate();
  if (t.degenerate()) throw DomainError("construct_points needs 0 < theta^2 < 4");
  if (w.realize() != t.theta_sq()) {
    throw DomainError("witness realizes " + w.realize().to_string() + ", not " + t.theta_sq().to_string());
  }
  // a-form: a = p'q' + s'sqrt(D)
  const Rational p = -w.p;
  const Rational& qq = w.q;
  if ((p + qq).is_zero()) {
    const Rational a = t.cos_apex().x();
    const auto psis = default_psi_sweep(a, sweep_count);
    return lemma21_points(t, psis);
  }
  if (abs(p - qq) == kTwo) throw std::logic_error("|p' - q'| = 2 on a non-degenerate triangle");

  const Rst rst = lemma22_rst(p, qq);
  const Rational u = p * rst.R;
  const Rational v = qq * rst.R;
  const Quadratic a = t.cos_apex();
  const int side = (q(v) - q(u) * a).sign();
  const Rational rho_sq = rst.R * rst.R - u * u;
  if (side == 0 && !rho_sq.is_zero()) throw std::logic_error("distance relation violated by construction");

  ApexCertificate c;
  c.R = abs(rst.R);
  c.S = abs(rst.S);
  c.T = abs(rst.T);
  c.u = u;
  c.v = v;
  c.coord_x = u;
  c.coord_y = RadicalSum::radical(Rational(side), rho_sq);
  c.on_line_ab = c.coord_y.is_zero();
  return {c};
}

ApexWitness extract_witness(const Rational& R, const Rational& S, const Rational& T, const ApexTriangle& t) {
  if (R.is_zero()) throw DomainError("extract_witness needs R != 0");
  if (t.degenerate()) throw DomainError("extract_witness needs 0 < theta^2 < 4");
  const Rational R2 = R * R;
  const Rational u = (R2 - S * S + kOne) / kTwo;
  const Rational v = (R2 - T * T + kOne) / kTwo;
  const Quadratic a = t.cos_apex();
  if (!relation_one_holds(R, u, v, a)) {
    throw DomainError("relation R^2a^2 + u^2 + v^2 = R^2 + 2auv fails for (" + R.to_string() + ", " +
                      S.to_string() + ", " + T.to_string() + ")");
  }
  if (u * u > R2 || v * v > R2) throw DomainError("u^2 <= R^2 and v^2 <= R^2 violated");
  const Rational p = u / R;
  const Rational qq = v / R;
  const int side = (a - q(p * qq)).sign();
  const Sign s = side < 0 ? Sign::Plus : Sign::Minus;
  ApexWitness w{-p, qq, s};
  if (w.realize() != t.theta_sq()) throw std::logic_error("extracted witness does not regenerate theta^2");
  return w;
}

bool check_certificate(const ApexTriangle& t, const ApexCertificate& c) {
  const Rational R2 = c.R * c.R;
  if (c.R.sign() <= 0 || c.S.sign() < 0 || c.T.sign() < 0) return false;
  if (c.u != (R2 - c.S * c.S + kOne) / kTwo) return false;
  if (c.v != (R2 - c.T * c.T + kOne) / kTwo) return false;
  if (c.u * c.u > R2 || c.v * c.v > R2) return false;
  const Quadratic a = t.cos_apex();
  if (!relation_one_holds(c.R, c.u, c.v, a)) return false;
  if (c.coord_x != c.u) return false;
  if (c.coord_y.component_count() > 1) return false;
  const ExactReal y2 = c.coord_y.square();
  if (!y2.is_rational() || y2.rational() != R2 - c.u * c.u) return false;
  const int side = (q(c.v) - q(c.u) * a).sign();
  if (t.degenerate()) {
    if (side != 0) return false;
  } else if (c.coord_y.sign() != side) {
    return false;
  }
  return c.on_line_ab == c.coord_y.is_zero();
}

std::array<RadicalSum, 3> squared_distances(const ApexCertificate& c, const ApexFrame& f) {
  const RadicalSum x(c.coord_x);
  const RadicalSum& y = c.coord_y;
  const RadicalSum dx_b = x - RadicalSum(kOne);
  const RadicalSum dx_c = x - f.a;
  const RadicalSum dy_c = y - f.b;
  return {x * x + y * y, dx_b * dx_b + y * y, dx_c * dx_c + dy_c * dy_c};
}

std::string Line::to_string() const {
  if (vertical) return "x=0";
  return "y=(" + slope.to_string() + ")*x";
}

bool mirror_pair(const Line& l1, const Line& l2, const ApexFrame& f) {
  if (l1.vertical && l2.vertical) return false;
  if (l1.vertical) return (l2.slope * f.b + f.a).is_zero();
  if (l2.vertical) return (f.a + l1.slope * f.b).is_zero();
  const RadicalSum& m1 = l1.slope;
  const RadicalSum& m2 = l2.slope;
  return (f.b - m1 * f.a - m2 * f.a - m1 * m2 * f.b).is_zero();
}

bool on_line(const Line& l, const Rational& x, const RadicalSum& y) {
  if (l.vertical) return x.is_zero();
  return y == l.slope * RadicalSum(x);
}

LocusReport locus_lines(const ApexTriangle& t, const ApexWitness& w) {
  if (t.theta_sq().is_rational()) throw DomainError("locus_lines needs irrational theta^2");
  if (w.realize() != t.theta_sq()) throw DomainError("witness does not realize theta^2");
  const Rational p0 = -w.p;
  const Rational& q0 = w.q;
  const ApexFrame frame = frame_for_witness(w);

  LocusReport rep;
  rep.product_zero = (p0 * q0).is_zero();
  auto add = [&rep](Line l) {
    for (const Line& c : rep.candidates) {
      if (c.same_as(l)) return;
    }
    rep.candidates.push_back(std::move(l));
  };
  // group 0 holds lines from p0, group 1 from q0 (or the vertical line)
  std::vector<int> group;
  auto add_pm = [&](const Rational& x, int g) {
    const RadicalSum k = RadicalSum::radical(kOne / x, kOne - x * x);
    for (const RadicalSum& m : {k, -k}) {
      const std::size_t before = rep.candidates.size();
      add(Line{false, m});
      if (rep.candidates.size() != before) group.push_back(g);
    }
  };
  if (rep.product_zero) {
    add(Line{true, {}});
    group.push_back(1);
    add_pm(p0.is_zero() ? q0 : p0, 0);
  } else {
    add_pm(p0, 0);
    add_pm(q0, 1);
  }

  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.candidates.size(); ++j) {
      if (group[i] == group[j]) continue;
      if (mirror_pair(rep.candidates[i], rep.candidates[j], frame)) {
        rep.pair = {rep.candidates[i], rep.candidates[j]};
        return rep;
      }
    }
  }
  throw std::logic_error("locus_lines: no mirror-symmetric pair among the candidates");
}

}  // namespace isodist::apex
