#include "isodist/enumerate.hpp"
#include "isodist/omega.hpp"

#include <doctest.h>

#include <numeric>

using namespace isodist;
using namespace isodist::omega;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

// Two-dimensional brute force: every pair (p, q), p <= q, of height <= h.
std::vector<std::pair<Rational, Rational>> brute(const Rational& w, std::uint32_t h) {
  const auto vals = rationals_by_height(h, Q(0), Q(static_cast<long>(h)));
  std::vector<std::pair<Rational, Rational>> out;
  for (const Rational& p : vals) {
    for (const Rational& q : vals) {
      if (p <= q && (p * p - Q(1)) * (q * q - Q(1)) == w) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Rational, Rational>> pairs_of(const std::vector<Representation>& reps) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& r : reps) out.emplace_back(r.p, r.q);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("omega") {

TEST_CASE("omega_value") {
  CHECK(omega_value(Q(11, 5), Q(1, 2)) == Q(-72, 25));
  CHECK(omega_value(Q(2), Q(1, 5)) == Q(-72, 25));
  CHECK(omega_value(Q(0), Q(0)) == Q(1));
  CHECK(omega_value(Q(1), Q(7, 3)) == Q(0));
  CHECK_THROWS_AS(omega_value(Q(-1), Q(0)), DomainError);
}

TEST_CASE("search matches a two-dimensional brute force") {
  for (const Rational& w : {Q(-72, 25), Q(1), Q(-1), Q(3), Q(-3, 4), Q(15, 16), Q(2)}) {
    const auto reps = search_representations(w, 12, kernels::Exec::Serial);
    CHECK(pairs_of(reps) == brute(w, 12));
    for (const auto& r : reps) {
      CHECK(r.p <= r.q);
      CHECK(omega_value(r.p, r.q) == w);
      CHECK(r.value == w);
    }
  }
}

TEST_CASE("the paper's double representation of -72/25 is found") {
  const auto reps = search_representations(Q(-72, 25), 12, kernels::Exec::Serial);
  auto has = [&](const Rational& p, const Rational& q) {
    return std::any_of(reps.begin(), reps.end(), [&](const Representation& r) { return r.p == p && r.q == q; });
  };
  CHECK(has(Q(1, 2), Q(11, 5)));
  CHECK(has(Q(1, 5), Q(2)));
  REQUIRE(reps.size() >= 2);
  CHECK(reps[0].p == Q(1, 2));
  CHECK(reps[1].p == Q(1, 5));
}

TEST_CASE("known non-members stay absent") {
  for (const Rational& w : {Q(-1), Q(2), Q(1, 2)}) {
    CHECK(search_representations(w, 50, kernels::Exec::Serial).empty());
  }
}

TEST_CASE("zero has the p = 1 family") {
  const auto reps = search_representations(Q(0), 3, kernels::Exec::Serial);
  CHECK(pairs_of(reps) == brute(Q(0), 3));
  for (const auto& r : reps) CHECK((r.p == Q(1) || r.q == Q(1)));
}

TEST_CASE("a representation is found at its own height") {
  const auto vals = rationals_by_height(6, Q(0), Q(6));
  for (const Rational& p : vals) {
    for (const Rational& q : vals) {
      if (p > q) continue;
      const Rational w = omega_value(p, q);
      const auto h = static_cast<std::uint32_t>(std::max(p.height(), q.height()).get_ui());
      const auto reps = search_representations(w, h, kernels::Exec::Serial);
      const bool found = std::any_of(reps.begin(), reps.end(),
                                     [&](const Representation& r) { return r.p == p && r.q == q; });
      CHECK(found);
    }
  }
}

TEST_CASE("search is monotone in the bound") {
  const auto small = search_representations(Q(-72, 25), 6, kernels::Exec::Serial);
  const auto large = search_representations(Q(-72, 25), 20, kernels::Exec::Serial);
  for (const auto& r : small) {
    CHECK(std::any_of(large.begin(), large.end(), [&](const Representation& x) { return x == r; }));
  }
}

TEST_CASE("pythagorean representations of one") {
  const auto reps = pythagorean_reps_of_one(10);
  REQUIRE(reps.size() == 10);
  CHECK(reps[0].p == Q(5, 4));
  CHECK(reps[0].q == Q(5, 3));
  CHECK(reps[1].p == Q(13, 12));
  CHECK(reps[1].q == Q(13, 5));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(omega_value(reps[i].p, reps[i].q) == Q(1));
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(reps[i] == reps[j]);
  }
  // triples by brute force: x^2 + y^2 = z^2, primitive
  std::size_t primitive = 0;
  for (long z = 1; z <= 100; ++z) {
    for (long x = 1; x < z; ++x) {
      for (long y = x; y < z; ++y) {
        if (x * x + y * y == z * z && std::gcd(x, y) == 1) ++primitive;
      }
    }
  }
  CHECK(pythagorean_reps_of_one(primitive).size() == primitive);
}

}  // TEST_SUITE
