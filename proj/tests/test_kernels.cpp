#include "isodist/base.hpp"
#include "isodist/kernels.hpp"
#include "isodist/omega.hpp"
#include "isodist/oracle.hpp"
#include "isodist/parse.hpp"

#include <doctest.h>
#include <omp.h>

#include <atomic>

using namespace isodist;
using isodist::kernels::Exec;

TEST_SUITE("kernels") {

TEST_CASE("collect keeps index order") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    const auto out = kernels::collect<int>(
        1000, [](std::size_t i, std::vector<int>& slot) {
          for (std::size_t k = 0; k < i % 3; ++k) slot.push_back(static_cast<int>(i));
        },
        Exec::Parallel);
    std::vector<int> want;
    for (int i = 0; i < 1000; ++i) {
      for (int k = 0; k < i % 3; ++k) want.push_back(i);
    }
    CHECK(out == want);
  }
}

TEST_CASE("run visits every index once") {
  omp_set_num_threads(4);
  std::vector<std::atomic<int>> seen(777);
  kernels::run(seen.size(), [&](std::size_t i) { seen[i]++; }, Exec::Parallel);
  for (const auto& s : seen) CHECK(s.load() == 1);
}

TEST_CASE("exceptions propagate out of the parallel region") {
  omp_set_num_threads(4);
  CHECK_THROWS_AS(kernels::run(100, [](std::size_t i) {
    if (i == 57) throw DomainError("boom");
  }, Exec::Parallel), DomainError);
}

TEST_CASE("parallel kernels equal the serial reference") {
  for (int threads : {1, 3, 4}) {
    omp_set_num_threads(threads);
    CHECK(oracle::apex_oracle(Rational(1), 6, Exec::Serial) == oracle::apex_oracle(Rational(1), 6, Exec::Parallel));
    CHECK(oracle::base_oracle(Rational(1), 8, Exec::Serial) == oracle::base_oracle(Rational(1), 8, Exec::Parallel));
    CHECK(omega::search_representations(Rational(-72, 25), 20, Exec::Serial) ==
          omega::search_representations(Rational(-72, 25), 20, Exec::Parallel));
    const auto t = base::BaseTriangle::from_theta_sq(ExactReal::parse("43/8+sqrt(825/64)"));
    REQUIRE(t.has_value());
    CHECK(base::search_witnesses(*t, 12, Exec::Serial) == base::search_witnesses(*t, 12, Exec::Parallel));
    const auto s1 = oracle::witness_sweep_equivalence(3, true, Exec::Serial);
    const auto s2 = oracle::witness_sweep_equivalence(3, true, Exec::Parallel);
    CHECK(s1.cases == s2.cases);
    CHECK(s1.suitable == s2.suitable);
    CHECK(s1.mutated_cases == s2.mutated_cases);
    CHECK(s1.mutated_suitable == s2.mutated_suitable);
    CHECK(s1.counterexamples == s2.counterexamples);
  }
}

}  // TEST_SUITE
