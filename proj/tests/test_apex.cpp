#include "isodist/apex.hpp"
#include "isodist/enumerate.hpp"
#include "isodist/parse.hpp"

#include <doctest.h>

using namespace isodist;
using namespace isodist::apex;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

ApexTriangle tri(const char* text) { return ApexTriangle(ExactReal::parse(text)); }

// Roots of t^2 - ((A-2)^2 + 4 - B)/4 t + (A-2)^2/4 by the quadratic formula,
// written out here without the library's trinomial helper.
std::optional<std::pair<Rational, Rational>> roots_by_formula(const Rational& A, const Rational& B) {
  const Rational m = (A - Q(2)) * (A - Q(2));
  const Rational lin = (m + Q(4) - B) / Q(4);
  const Rational c = m / Q(4);
  const Rational disc = lin * lin - Q(4) * c;
  if (disc.sign() < 0) return std::nullopt;
  const auto r = rational_sqrt(disc);
  if (!r) return std::nullopt;
  return std::pair{(lin - *r) / Q(2), (lin + *r) / Q(2)};
}

// Squared distances from M(u, y) to A(0,0), B(1,0), C(a,b) in Q(sqrt d), y^2
// rational, computed directly: |MC|^2 = u^2 + y^2 - 2ua - 2yb + 1.
Rational mc_squared_for_rational_a(const Rational& u, const RadicalSum& y, const Rational& a) {
  const RadicalSum b = RadicalSum::radical(Q(1), Q(1) - a * a);
  const RadicalSum v = RadicalSum(u * u) + y * y - RadicalSum(Q(2) * u * a) - RadicalSum(Q(2)) * y * b + RadicalSum(Q(1));
  REQUIRE(v.is_rational());
  return v.rational_part();
}

}  // namespace

TEST_SUITE("apex") {

TEST_CASE("decide: examples") {
  const Decision d1 = decide(tri("2+sqrt(3)"));
  REQUIRE(std::holds_alternative<Suitable>(d1));
  const auto& s1 = std::get<Suitable>(d1);
  CHECK(s1.route == Route::SurdCase);
  CHECK(s1.witness == ApexWitness{Q(1, 2), Q(0), Sign::Plus});
  CHECK(s1.witness.realize() == ExactReal::parse("2+sqrt(3)"));

  const Decision d2 = decide(tri("2+sqrt(2)"));
  REQUIRE(std::holds_alternative<NotSuitable>(d2));
  CHECK(std::get<NotSuitable>(d2).reason == Failure::RootNotSquare);
  CHECK(std::get<NotSuitable>(d2).roots == std::vector<Rational>{Q(0), Q(1, 2)});

  const Decision d3 = decide(tri("1+sqrt(5)"));
  REQUIRE(std::holds_alternative<NotSuitable>(d3));
  CHECK(std::get<NotSuitable>(d3).reason == Failure::NegativeDiscriminant);
  CHECK(std::get<NotSuitable>(d3).trinomial.linear == Q(0));
  CHECK(std::get<NotSuitable>(d3).trinomial.constant == Q(1, 4));

  // the library trinomial agrees with the quadratic-formula oracle
  const auto r = roots_by_formula(Q(2), Q(3));
  REQUIRE(r.has_value());
  CHECK(r->first == Q(0));
  CHECK(r->second == Q(1, 4));
  CHECK_FALSE(roots_by_formula(Q(1), Q(5)).has_value());
  const Trinomial f = apex_trinomial(Q(2), Q(3));
  CHECK(f.linear == Q(1, 4));
  CHECK(f.constant == Q(0));
}

TEST_CASE("decide: rational and degenerate") {
  for (long n = 0; n <= 16; ++n) {
    const Rational ts(n, 4);
    const Decision d = decide(ApexTriangle(ExactReal(ts)));
    REQUIRE(std::holds_alternative<Suitable>(d));
    const auto& s = std::get<Suitable>(d);
    CHECK(s.route == Route::RationalCase);
    CHECK(s.witness.realize() == ExactReal(ts));
  }
  CHECK(std::get<Suitable>(decide(ApexTriangle(ExactReal(Q(0))))).witness == ApexWitness{Q(1), Q(-1), Sign::Plus});
  CHECK(std::get<Suitable>(decide(ApexTriangle(ExactReal(Q(4))))).witness == ApexWitness{Q(1), Q(1), Sign::Plus});
  CHECK(std::get<Suitable>(decide(ApexTriangle(ExactReal(Q(1))))).witness ==
        ApexWitness{Q(-1, 2), Q(1), Sign::Plus});
  CHECK_THROWS_AS(ApexTriangle(ExactReal(Q(5))), DomainError);
  CHECK_THROWS_AS(ApexTriangle(ExactReal::parse("3+sqrt(2)")), DomainError);
}

TEST_CASE("decide: failure reasons") {
  // Roots outside [0, 1] would force theta^2 outside (0, 4), so that reason stays a defensive check.
  bool irrational = false, out_of_range = false;
  for (const Rational& A : rationals_by_height(6, Q(0), Q(4))) {
    for (const Rational& B : rationals_by_height(6, Q(0), Q(16))) {
      if (B.is_zero() || is_rational_square(B)) continue;
      const ExactReal ts = make_exact(A, Sign::Minus, B);
      const Quadratic qv = ts.to_quadratic();
      if (qv.sign() < 0 || (qv - Quadratic(Q(4))).sign() > 0) continue;
      const Decision d = decide(ApexTriangle(ts));
      if (const auto* n = std::get_if<NotSuitable>(&d)) {
        irrational |= n->reason == Failure::IrrationalRoots;
        out_of_range |= n->reason == Failure::RootOutOfRange;
      } else {
        CHECK(std::get<Suitable>(d).witness.realize() == ts);
      }
    }
  }
  CHECK(irrational);
  CHECK_FALSE(out_of_range);
}

TEST_CASE("lemma21_points") {
  const ApexTriangle one(ExactReal(Q(1)));
  const std::vector<Rational> psis{Q(3), Q(0)};
  const auto c = lemma21_points(one, psis);
  REQUIRE(c.size() == 2);
  CHECK(c[0].R == Q(8, 5));
  CHECK(c[0].S == Q(3, 5));
  CHECK(c[0].T == Q(7, 5));
  CHECK(c[0].coord_x == Q(8, 5));
  CHECK(c[0].on_line_ab);
  CHECK(c[1].R == Q(1));
  CHECK(c[1].S == Q(0));
  CHECK(c[1].T == Q(1));
  // MC^2 = (8/5 - 1/2)^2 + 3/4
  CHECK(square(Q(8, 5) - Q(1, 2)) + Q(3, 4) == Q(196, 100));

  const ApexTriangle two(ExactReal(Q(2)));
  const std::vector<Rational> psi2{Q(2)};
  const auto c2 = lemma21_points(two, psi2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].R == Q(3, 4));
  CHECK(c2[0].S == Q(1, 4));
  CHECK(c2[0].T == Q(5, 4));

  const std::vector<Rational> bad{Q(1, 2)};
  CHECK_THROWS(lemma21_points(one, bad));

  for (const Rational& psi : default_psi_sweep(Q(1, 2), 40)) {
    CHECK(psi != Q(1, 2));
    CHECK(abs(psi) != Q(1));
  }
}

TEST_CASE("lemma21 distances hold for every psi of small height") {
  for (long n = 1; n <= 15; ++n) {
    const Rational ts(n, 4);
    const Rational a = Q(1) - ts / Q(2);
    const ApexTriangle t{ExactReal(ts)};
    std::vector<Rational> psis = rationals_by_height(7, Q(-7), Q(7));
    std::erase_if(psis, [&](const Rational& x) { return x == a || abs(x) == Q(1); });
    for (const auto& c : lemma21_points(t, psis)) {
      CHECK(c.R * c.R == square(c.coord_x));
      CHECK(c.S * c.S == square(c.coord_x - Q(1)));
      CHECK(c.T * c.T == mc_squared_for_rational_a(c.coord_x, RadicalSum(), a));
      CHECK(check_certificate(t, c));
    }
  }
}

TEST_CASE("lemma22_rst") {
  CHECK(lemma22_rst(Q(1, 2), Q(0)) == Rst{Q(15, 8), Q(13, 8), Q(17, 8)});
  CHECK(lemma22_rst(Q(-1, 2), Q(0)) == Rst{Q(-15, 8), Q(-13, 8), Q(-17, 8)});
  CHECK(lemma22_rst(Q(1), Q(0)) == Rst{Q(3, 4), Q(1, 4), Q(5, 4)});
  CHECK_THROWS(lemma22_rst(Q(1, 2), Q(-1, 2)));
  CHECK_THROWS(lemma22_rst(Q(1), Q(-1)));
  for (const Rational& p : rationals_by_height(6, Q(-1), Q(1))) {
    for (const Rational& q : rationals_by_height(6, Q(-1), Q(1))) {
      if ((p + q).is_zero() || abs(p - q) == Q(2)) continue;
      const Rst r = lemma22_rst(p, q);
      REQUIRE_FALSE(r.R.is_zero());
      CHECK((r.R * r.R - r.S * r.S + Q(1)) / (Q(2) * r.R) == p);
      CHECK((r.R * r.R - r.T * r.T + Q(1)) / (Q(2) * r.R) == q);
    }
  }
}

TEST_CASE("construct_points: worked example") {
  const ApexTriangle t = tri("2+sqrt(3)");
  const auto certs = construct_points(t, ApexWitness{Q(1, 2), Q(0), Sign::Plus});
  REQUIRE(certs.size() == 1);
  const auto& c = certs[0];
  CHECK(c.R == Q(15, 8));
  CHECK(c.S == Q(13, 8));
  CHECK(c.T == Q(17, 8));
  CHECK(c.u == Q(15, 16));
  CHECK(c.v == Q(0));
  CHECK(c.coord_y.identical(RadicalSum::radical(Q(15, 16), Q(3))));
  // by hand in Q(sqrt 3): a = -sqrt(3)/2, b = 1/2
  const RadicalSum a = RadicalSum::radical(Q(-1, 2), Q(3));
  const RadicalSum b(Q(1, 2));
  const RadicalSum u(c.u);
  const RadicalSum y = c.coord_y;
  CHECK(u * u + y * y == RadicalSum(Q(225, 64)));
  CHECK((u - RadicalSum(Q(1))) * (u - RadicalSum(Q(1))) + y * y == RadicalSum(Q(169, 64)));
  CHECK((u - a) * (u - a) + (y - b) * (y - b) == RadicalSum(Q(289, 64)));
  CHECK(check_certificate(t, c));
}

TEST_CASE("construct_points: rational apex cosine delegates to the sweep") {
  const ApexTriangle one(ExactReal(Q(1)));
  const auto certs = construct_points(one, ApexWitness{Q(1, 2), Q(1, 2), Sign::Minus}, 6);
  CHECK(certs.size() == 6);
  for (const auto& c : certs) {
    CHECK(c.on_line_ab);
    CHECK(check_certificate(one, c));
  }
  CHECK_THROWS(construct_points(ApexTriangle(ExactReal(Q(4))), ApexWitness{Q(1), Q(1), Sign::Plus}));
  CHECK_THROWS(construct_points(tri("2+sqrt(3)"), ApexWitness{Q(0), Q(0), Sign::Plus}));
}

TEST_CASE("extract_witness") {
  const ApexTriangle t = tri("2+sqrt(3)");
  const ApexWitness w = extract_witness(Q(-15, 8), Q(-13, 8), Q(-17, 8), t);
  CHECK(w.realize() == t.theta_sq());
  CHECK(w == ApexWitness{Q(1, 2), Q(0), Sign::Plus});
  CHECK(extract_witness(Q(15, 8), Q(13, 8), Q(17, 8), t).realize() == t.theta_sq());

  const ApexTriangle one(ExactReal(Q(1)));
  CHECK(extract_witness(Q(1), Q(0), Q(1), one).realize() == ExactReal(Q(1)));
  CHECK(relation_one_holds(Q(1), Q(1), Q(1, 2), Quadratic(Q(1, 2))));

  CHECK_THROWS_AS(extract_witness(Q(1), Q(1), Q(1), t), DomainError);
  CHECK_THROWS_AS(extract_witness(Q(0), Q(1), Q(1), t), DomainError);
}

TEST_CASE("construct and extract round-trip on theta^2") {
  const auto ps = rationals_by_height(5, Q(-1), Q(1));
  for (const Rational& p : ps) {
    for (const Rational& q : ps) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const ApexWitness w{p, q, s};
        const ExactReal ts = w.realize();
        const Quadratic tq = ts.to_quadratic();
        if (tq.sign() <= 0 || (tq - Quadratic(Q(4))).sign() >= 0) continue;
        const ApexTriangle t(ts);
        for (const auto& c : construct_points(t, w, 3)) {
          CHECK(check_certificate(t, c));
          CHECK(extract_witness(c.R, c.S, c.T, t).realize() == ts);
        }
      }
    }
  }
}

TEST_CASE("locus_lines: worked example") {
  const ApexTriangle t = tri("2+sqrt(3)");
  const ApexWitness w{Q(1, 2), Q(0), Sign::Plus};
  const LocusReport rep = locus_lines(t, w);
  CHECK(rep.product_zero);
  CHECK(rep.candidates.size() == 3);
  CHECK(rep.pair[0].vertical);
  CHECK_FALSE(rep.pair[1].vertical);
  CHECK(rep.pair[1].slope == RadicalSum::radical(Q(1), Q(3)));
  const auto c = construct_points(t, w).front();
  CHECK(on_line(rep.pair[1], c.coord_x, c.coord_y));
  CHECK_THROWS(locus_lines(ApexTriangle(ExactReal(Q(1))), ApexWitness{Q(-1, 2), Q(1), Sign::Plus}));
}

TEST_CASE("decide is deterministic") {
  const auto a = decide(tri("2+sqrt(3)"));
  const auto b = decide(tri("2+sqrt(3)"));
  CHECK(std::get<Suitable>(a).witness == std::get<Suitable>(b).witness);
}

}  // TEST_SUITE
