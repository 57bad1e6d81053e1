#include "isodist/base.hpp"
#include "isodist/enumerate.hpp"
#include "isodist/parse.hpp"

#include <doctest.h>

using namespace isodist;
using namespace isodist::base;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

RadicalSum rs(const char* text) { return RadicalSum::parse(text); }

// MA^2, MB^2, MC^2 from coordinates: A(0, Phi), B(-1, 0), C(1, 0), M(x0, y0).
std::array<RadicalSum, 3> squared_from_coordinates(const RadicalSum& phi, const BasePoint& m) {
  const RadicalSum x(m.x0);
  const RadicalSum dy = phi - m.y0;
  return {x * x + dy * dy, (x + RadicalSum(Q(1))) * (x + RadicalSum(Q(1))) + m.y0 * m.y0,
          (x - RadicalSum(Q(1))) * (x - RadicalSum(Q(1))) + m.y0 * m.y0};
}

}  // namespace

TEST_SUITE("base") {

TEST_CASE("triangle construction") {
  const BaseTriangle t(rs("sqrt(3)+2"));
  CHECK(t.theta_sq() == make_exact(Q(8), Sign::Plus, Q(48)));
  CHECK_THROWS_AS(BaseTriangle(rs("sqrt(2)-2")), DomainError);

  const auto from = BaseTriangle::from_theta_sq(make_exact(Q(8), Sign::Plus, Q(48)));
  REQUIRE(from.has_value());
  CHECK(from->phi() == rs("sqrt(3)+2"));
  const auto two = BaseTriangle::from_theta_sq(ExactReal(Q(2)));
  REQUIRE(two.has_value());
  CHECK(two->phi() == RadicalSum(Q(1)));
  CHECK_FALSE(BaseTriangle::from_theta_sq(ExactReal::parse("7+2*sqrt(6)")).has_value());
  CHECK_THROWS(BaseTriangle::from_theta_sq(ExactReal(Q(1, 2))));
}

TEST_CASE("verify_witness") {
  const BaseTriangle t(rs("sqrt(3)+2"));
  CHECK(verify_witness(t, BaseWitness{Q(2), Q(0), Q(2), Sign::Plus, Sign::Plus}));
  CHECK_FALSE(verify_witness(t, BaseWitness{Q(2), Q(0), Q(3), Sign::Plus, Sign::Plus}));
  const BaseTriangle r(RadicalSum(Q(109, 60)));
  CHECK(verify_witness(r, BaseWitness{Q(5, 3), Q(3, 5), Q(5, 4), Sign::Plus, Sign::Plus}));
  // invalid witnesses are rejected rather than thrown
  CHECK_FALSE(verify_witness(t, BaseWitness{Q(1, 2), Q(0), Q(2), Sign::Plus, Sign::Plus}));
}

TEST_CASE("construct_points: examples") {
  const BaseTriangle t(rs("sqrt(3)+2"));
  const auto pts = construct_points(t, BaseWitness{Q(2), Q(0), Q(2), Sign::Plus, Sign::Plus});
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].x0 == Q(0));
  CHECK(pts[0].e == Q(3));
  CHECK(pts[0].dist_a == Q(2));
  CHECK(pts[0].dist_b == Q(2));
  CHECK(pts[0].dist_c == Q(2));

  const BaseTriangle r(RadicalSum(Q(109, 60)));
  const auto p2 = construct_points(r, BaseWitness{Q(5, 3), Q(3, 5), Q(5, 4), Sign::Plus, Sign::Plus});
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].x0 == Q(1));
  CHECK(p2[0].e == Q(256, 225));
  CHECK(p2[0].dist_a == Q(5, 4));
  CHECK(p2[0].dist_b == Q(34, 15));
  CHECK(p2[0].dist_c == Q(16, 15));
  CHECK(p2[1].x0 == Q(-1));
  CHECK(p2[1].dist_b == Q(16, 15));
  CHECK(p2[1].dist_c == Q(34, 15));

  const BaseTriangle flat{RadicalSum()};
  const auto p3 = construct_points(flat, BaseWitness{Q(1), Q(1), Q(1), Sign::Plus, Sign::Plus});
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].e == Q(0));
  CHECK(p3[0].dist_b == Q(2));
  CHECK(p3[0].dist_c == Q(0));
  CHECK(p3[1].dist_b == Q(0));
  CHECK(p3[1].dist_c == Q(2));

  CHECK_THROWS(construct_points(t, BaseWitness{Q(2), Q(0), Q(3), Sign::Plus, Sign::Plus}));
}

TEST_CASE("lemma31 rational-altitude points") {
  const BaseTriangle t(RadicalSum(Q(1)));
  const auto pts = lemma31_points(t, 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x0 == Q(15, 8));
  CHECK(pts[0].dist_a == Q(17, 8));
  CHECK(pts[0].dist_b == Q(23, 8));
  CHECK(pts[0].dist_c == Q(7, 8));
  CHECK(pts[1].x0 == Q(-15, 8));
  CHECK_THROWS(lemma31_points(t, 1));
  CHECK(lemma31_min_n(Q(1)) == 2);
  CHECK(lemma31_min_n(Q(1, 2)) == 4);
  CHECK(lemma31_min_n(Q(7, 3)) == 1);

  const BaseTriangle half(RadicalSum::radical(Q(1), Q(1, 2)));
  const auto ph = lemma31_points(half, 4);
  CHECK(ph[0].x0 == Q(31, 16));
  CHECK(ph[0].dist_a == Q(33, 16));
  for (const auto& m : ph) CHECK(check_point(half, m));

  const BaseWitness w = lemma31_witness(Q(1), 2);
  CHECK(w.p == Q(15, 8));
  CHECK(w.q == Q(1));
  CHECK(w.r == Q(17, 8));
  CHECK(verify_witness(t, w));
}

TEST_CASE("extract_witness") {
  const BaseTriangle t(rs("sqrt(3)+2"));
  CHECK(extract_witness(Q(0), Q(3), Q(2), Q(2), Q(2), t) == BaseWitness{Q(2), Q(0), Q(2), Sign::Plus, Sign::Plus});
  const BaseTriangle r(RadicalSum(Q(109, 60)));
  CHECK(extract_witness(Q(1), Q(256, 225), Q(34, 15), Q(16, 15), Q(5, 4), r) ==
        BaseWitness{Q(5, 3), Q(3, 5), Q(5, 4), Sign::Plus, Sign::Plus});
  CHECK_THROWS_AS(extract_witness(Q(15, 8), Q(0), Q(23, 8), Q(7, 8), Q(17, 8), BaseTriangle(RadicalSum(Q(1)))),
                  DomainError);
  // inconsistent distances
  CHECK_THROWS(extract_witness(Q(0), Q(3), Q(2), Q(3), Q(2), t));
}

TEST_CASE("construct then extract over small witnesses") {
  const auto ps = rationals_by_height(5, Q(1), Q(5));
  const auto qs = rationals_by_height(5, Q(0), Q(1));
  const auto rsv = rationals_by_height(5, Q(0), Q(5));
  std::size_t round_trips = 0;
  for (const Rational& p : ps) {
    for (const Rational& q : qs) {
      for (const Rational& r : rsv) {
        if (r < p * q) continue;
        for (Sign e1 : {Sign::Plus, Sign::Minus}) {
          for (Sign e2 : {Sign::Plus, Sign::Minus}) {
            const BaseWitness w{p, q, r, e1, e2};
            const RadicalSum phi = w.altitude();
            if (phi.sign() < 0 || phi.component_count() > 2) continue;
            const BaseTriangle t(phi);
            REQUIRE(verify_witness(t, w));
            for (const BasePoint& m : construct_points(t, w)) {
              const auto sq = squared_from_coordinates(phi, m);
              CHECK(sq[0] == RadicalSum(m.dist_a * m.dist_a));
              CHECK(sq[1] == RadicalSum(m.dist_b * m.dist_b));
              CHECK(sq[2] == RadicalSum(m.dist_c * m.dist_c));
              if (m.e.sign() > 0) {
                const BaseWitness back = extract_witness(m.x0, m.e, m.dist_b, m.dist_c, m.dist_a, t);
                CHECK(back.altitude() == phi);
                ++round_trips;
              }
            }
          }
        }
      }
    }
  }
  CHECK(round_trips > 100);
}

TEST_CASE("locus_lines") {
  const auto l1 = locus_lines(BaseTriangle(rs("sqrt(3)+2")));
  CHECK(((l1[0] == rs("sqrt(3)") && l1[1] == RadicalSum(Q(2))) || (l1[1] == rs("sqrt(3)") && l1[0] == RadicalSum(Q(2)))));
  const auto l2 = locus_lines(BaseTriangle(rs("sqrt(2)+sqrt(3)")));
  CHECK(((l2[0] == rs("sqrt(2)") && l2[1] == rs("sqrt(3)")) || (l2[1] == rs("sqrt(2)") && l2[0] == rs("sqrt(3)"))));
  CHECK_THROWS(locus_lines(BaseTriangle(RadicalSum(Q(109, 60)))));
}

TEST_CASE("decide") {
  const Decision d1 = decide(ExactReal(Q(2)), 8, kernels::Exec::Serial);
  REQUIRE(std::holds_alternative<RationalRoute>(d1));
  CHECK(std::get<RationalRoute>(d1).n == 2);

  const Decision d0 = decide(ExactReal(Q(1)), 8, kernels::Exec::Serial);
  REQUIRE(std::holds_alternative<RationalRoute>(d0));
  CHECK(std::get<RationalRoute>(d0).n == 0);

  const Decision d2 = decide(make_exact(Q(8), Sign::Plus, Q(48)), 8, kernels::Exec::Serial);
  REQUIRE(std::holds_alternative<Found>(d2));
  CHECK(verify_witness(BaseTriangle(rs("sqrt(3)+2")), std::get<Found>(d2).witness));

  const Decision d3 = decide(ExactReal::parse("43/8+sqrt(825/64)"), 4, kernels::Exec::Serial);
  REQUIRE(std::holds_alternative<Found>(d3));
  CHECK(std::get<Found>(d3).witness == BaseWitness{Q(3, 2), Q(1, 2), Q(2), Sign::Plus, Sign::Plus});

  // Phi = sqrt(2) + sqrt(3): no witness of small height
  const Decision d4 = decide(make_exact(Q(6), Sign::Plus, Q(24)), 6, kernels::Exec::Serial);
  CHECK(std::holds_alternative<UnknownUpTo>(d4));

  const Decision d5 = decide(ExactReal::parse("7+2*sqrt(6)"), 6, kernels::Exec::Serial);
  CHECK(std::holds_alternative<NotSuitable>(d5));
}

TEST_CASE("witness search covers every generated witness") {
  // witnesses of height <= 4 must be found again by the search at bound 4
  const auto ps = rationals_by_height(4, Q(1), Q(4));
  const auto qs = rationals_by_height(4, Q(0), Q(1));
  std::size_t checked = 0;
  for (const Rational& p : ps) {
    for (const Rational& q : qs) {
      for (const Rational& r : rationals_by_height(4, p * q, Q(4))) {
        const BaseWitness w{p, q, r, Sign::Plus, Sign::Plus};
        const RadicalSum phi = w.altitude();
        if (phi.component_count() > 2) continue;
        const BaseTriangle t(phi);
        if (t.theta_sq().is_rational()) continue;
        const auto found = search_witnesses(t, 4, kernels::Exec::Serial);
        bool hit = false;
        for (const auto& f : found) {
          CHECK(verify_witness(t, f));
          hit |= f.altitude() == phi && f.p == p && f.q == q && f.r == r;
        }
        CHECK(hit);
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

}  // TEST_SUITE
