#include "isodist/oracle.hpp"

#include "isodist/apex.hpp"
#include "isodist/base.hpp"
#include "isodist/enumerate.hpp"

#include <algorithm>

namespace isodist::oracle {

namespace {

const Rational kZero;
const Rational kOne(1);
const Rational kTwo(2);
const Rational kFour(4);

bool in_box(const Rational& x, std::uint32_t bound) {
  const mpz_class b(static_cast<unsigned long>(bound));
  return x.sign() >= 0 && x.den() <= b && x <= Rational(b);
}

bool contains(const std::vector<Hit>& hits, const std::array<Rational, 3>& d) {
  return std::any_of(hits.begin(), hits.end(), [&](const Hit& h) { return h.distances == d; });
}

void sort_hits(std::vector<Hit>& hits) {
  std::sort(hits.begin(), hits.end(), hit_less);
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
}

}  // namespace

std::string to_string(Family f) { return f == Family::Apex ? "apex" : "base"; }

bool hit_less(const Hit& a, const Hit& b) {
  for (std::size_t i = 0; i < 2; ++i) {
    if (int c = height_compare(a.source[i], b.source[i])) return c < 0;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (int c = height_compare(a.distances[i], b.distances[i])) return c < 0;
  }
  return false;
}

std::vector<Hit> apex_oracle(const Rational& theta_sq, std::uint32_t bound, kernels::Exec exec) {
  if (theta_sq.sign() <= 0 || theta_sq >= kFour) throw DomainError("apex_oracle needs 0 < theta^2 < 4");
  const Rational a = kOne - theta_sq / kTwo;
  const Rational b2 = kOne - a * a;
  const ExactReal param(theta_sq);
  const std::vector<Rational> values = rationals_in_box(bound, kZero, Rational(static_cast<long>(bound)));

  auto body = [&](std::size_t i, std::vector<Hit>& slot) {
    const Rational& R = values[i];
    if (R.is_zero()) return;
    const Rational R2 = R * R;
    for (const Rational& S : values) {
      const Rational u = (R2 - S * S + kOne) / kTwo;
      const Rational rho2 = R2 - u * u;
      if (rho2.sign() < 0) continue;
      // rho*b = +-sigma must leave T^2 = R^2 + 1 - 2ua - 2 rho b a rational square
      const auto sigma = rational_sqrt(rho2 * b2);
      if (!sigma) continue;
      const Rational base = R2 + kOne - kTwo * u * a;
      for (int sg : {1, -1}) {
        if (sg < 0 && sigma->is_zero()) break;
        const auto T = rational_sqrt(base - Rational(2 * sg) * *sigma);
        if (!T) continue;
        slot.push_back(Hit{Family::Apex, param, {R, S, *T}, {R, S}});
      }
    }
  };
  std::vector<Hit> hits = kernels::collect<Hit>(values.size(), body, exec);
  sort_hits(hits);
  return hits;
}

std::vector<Hit> base_oracle(const Rational& phi_sq, std::uint32_t bound, kernels::Exec exec) {
  if (phi_sq.sign() <= 0) throw DomainError("base_oracle needs Phi^2 > 0");
  const ExactReal param(phi_sq + kOne);
  const std::vector<Rational> values = rationals_in_box(bound, kZero, Rational(static_cast<long>(bound)));

  auto body = [&](std::size_t i, std::vector<Hit>& slot) {
    const Rational& R = values[i];
    const Rational R2 = R * R;
    for (const Rational& S : values) {
      const Rational x0 = (R2 - S * S) / kFour;
      const Rational e = R2 - square(x0 + kOne);
      if (e.sign() < 0) continue;
      // MA^2 = x0^2 + Phi^2 + e - 2 Phi y0, with Phi y0 = +-tau
      const auto tau = rational_sqrt(phi_sq * e);
      if (!tau) continue;
      const Rational base = x0 * x0 + phi_sq + e;
      for (int sg : {1, -1}) {
        if (sg < 0 && tau->is_zero()) break;
        const auto r = rational_sqrt(base - Rational(2 * sg) * *tau);
        if (!r) continue;
        slot.push_back(Hit{Family::Base, param, {*r, R, S}, {R, S}});
      }
    }
  };
  std::vector<Hit> hits = kernels::collect<Hit>(values.size(), body, exec);
  sort_hits(hits);
  return hits;
}

bool verify_hit(const Hit& h) {
  if (!h.theta_sq.is_rational()) return false;
  for (const Rational& d : h.distances) {
    if (d.sign() < 0) return false;
  }
  const Rational ts = h.theta_sq.rational();
  if (h.family == Family::Apex) {
    // A(0,0), B(1,0), C(a,b); M(u, rho)
    const auto& [R, S, T] = h.distances;
    if (R.sign() <= 0) return false;
    const Rational a = kOne - ts / kTwo;
    const Rational u = (R * R - S * S + kOne) / kTwo;
    const Rational v = (R * R - T * T + kOne) / kTwo;
    const Rational rho2 = R * R - u * u;
    if (rho2.sign() < 0) return false;
    // |MC|^2 = T^2 <=> rho*b = v - ua, which squares to this identity
    return rho2 * (kOne - a * a) == square(v - u * a);
  }
  // A(0,Phi), B(-1,0), C(1,0); M(x0, y0), y0^2 = e
  const auto& [r, R, S] = h.distances;
  const Rational phi2 = ts - kOne;
  const Rational x0 = (R * R - S * S) / kFour;
  const Rational e = R * R - square(x0 + kOne);
  if (e.sign() < 0) return false;
  if (square(x0 - kOne) + e != S * S) return false;
  // r^2 = x0^2 + Phi^2 + e - 2 Phi y0  <=>  (x0^2 + Phi^2 + e - r^2)^2 = 4 Phi^2 e, sign permitting
  const Rational gap = x0 * x0 + phi2 + e - r * r;
  return gap * gap == kFour * phi2 * e;
}

CrossCheck check_apex_against_construct(const Rational& theta_sq, std::uint32_t bound, kernels::Exec exec) {
  CrossCheck out;
  const std::vector<Hit> hits = apex_oracle(theta_sq, bound, exec);
  out.hits = hits.size();
  for (const Hit& h : hits) {
    if (!verify_hit(h)) {
      ++out.unverified;
      out.problems.push_back("oracle hit fails re-verification");
    }
  }
  const apex::ApexTriangle t{ExactReal(theta_sq)};
  const Rational a = kOne - theta_sq / kTwo;
  std::vector<Rational> psis = rationals_by_height(bound, -Rational(static_cast<long>(bound)),
                                                   Rational(static_cast<long>(bound)));
  std::erase_if(psis, [&](const Rational& x) { return x == a || abs(x) == kOne; });
  std::vector<apex::ApexCertificate> certs = apex::lemma21_points(t, psis);
  const auto d = apex::decide(t);
  const auto& w = std::get<apex::Suitable>(d).witness;
  for (auto& c : apex::construct_points(t, w)) certs.push_back(std::move(c));

  for (const auto& c : certs) {
    if (!in_box(c.R, bound) || !in_box(c.S, bound)) continue;
    ++out.constructed;
    if (!apex::check_certificate(t, c)) {
      ++out.unverified;
      out.problems.push_back("constructed point fails re-verification");
    }
    if (!contains(hits, {c.R, c.S, c.T})) {
      ++out.missing;
      out.problems.push_back("oracle misses (" + c.R.to_string() + ", " + c.S.to_string() + ", " +
                             c.T.to_string() + ")");
    }
  }
  return out;
}

CrossCheck check_base_against_construct(const Rational& phi_sq, std::uint32_t bound, kernels::Exec exec) {
  CrossCheck out;
  const std::vector<Hit> hits = base_oracle(phi_sq, bound, exec);
  out.hits = hits.size();
  for (const Hit& h : hits) {
    if (!verify_hit(h)) {
      ++out.unverified;
      out.problems.push_back("oracle hit fails re-verification");
    }
  }
  const base::BaseTriangle t(RadicalSum::radical(kOne, phi_sq));
  const std::uint64_t n0 = base::lemma31_min_n(phi_sq);
  for (std::uint64_t n = n0; n < n0 + bound; ++n) {
    for (const auto& m : base::lemma31_points(t, n)) {
      if (!in_box(m.dist_b, bound) || !in_box(m.dist_c, bound)) continue;
      ++out.constructed;
      if (!base::check_point(t, m)) {
        ++out.unverified;
        out.problems.push_back("constructed point fails re-verification");
      }
      if (!contains(hits, {m.dist_a, m.dist_b, m.dist_c})) {
        ++out.missing;
        out.problems.push_back("oracle misses (" + m.dist_a.to_string() + ", " + m.dist_b.to_string() + ", " +
                               m.dist_c.to_string() + ")");
      }
    }
  }
  return out;
}

SweepReport witness_sweep_equivalence(std::uint32_t bound, bool mutate, kernels::Exec exec) {
  const std::vector<Rational> ps = rationals_by_height(bound, Rational(-1), kOne);

  struct Outcome {
    bool mutated = false;
    bool suitable = false;
    std::string problem;
  };

  auto check = [](const ExactReal& ts, bool expect_suitable, std::vector<Outcome>& slot, bool mutated) {
    Outcome o;
    o.mutated = mutated;
    const apex::Decision d = apex::decide(apex::ApexTriangle(ts));
    if (const auto* s = std::get_if<apex::Suitable>(&d)) {
      o.suitable = true;
      if (s->witness.realize() != ts) o.problem = "witness does not regenerate " + ts.to_string();
    } else if (expect_suitable) {
      o.problem = "decided not suitable: " + ts.to_string();
    }
    slot.push_back(std::move(o));
  };

  auto body = [&](std::size_t i, std::vector<Outcome>& slot) {
    const Rational& p = ps[i];
    for (const Rational& q : ps) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const ExactReal ts = apex::ApexWitness{p, q, s}.realize();
        check(ts, true, slot, false);
        if (!mutate || ts.is_rational()) continue;
        const Surd& sd = ts.surd();
        for (const auto& [da, db] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
          const Rational A = sd.a + Rational(da);
          const Rational B = sd.b + Rational(db);
          if (B.sign() <= 0) continue;
          const ExactReal m = make_exact(A, sd.s, B);
          const Quadratic mq = m.to_quadratic();
          if (mq.sign() < 0 || (mq - Quadratic(kFour)).sign() > 0) continue;
          check(m, false, slot, true);
        }
      }
    }
  };
  const std::vector<Outcome> outcomes = kernels::collect<Outcome>(ps.size(), body, exec);

  SweepReport rep;
  for (const Outcome& o : outcomes) {
    if (o.mutated) {
      ++rep.mutated_cases;
      if (o.suitable) ++rep.mutated_suitable;
    } else {
      ++rep.cases;
      if (o.suitable) ++rep.suitable;
    }
    if (!o.problem.empty()) rep.counterexamples.push_back(o.problem);
  }
  return rep;
}

}  // namespace isodist::oracle
