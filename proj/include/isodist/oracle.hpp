#pragma once

// Brute-force enumerators that rediscover rational-distance points from the
// Pythagorean distance equations alone. They share nothing with the
// constructive formulas in apex/base and exist to cross-check them.

#include "isodist/exact_real.hpp"
#include "isodist/kernels.hpp"
#include "isodist/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace isodist::oracle {

enum class Family { Apex, Base };

std::string to_string(Family f);

struct Hit {
  Family family = Family::Apex;
  ExactReal theta_sq;
  std::array<Rational, 3> distances;  // MA, MB, MC
  std::array<Rational, 2> source;     // the enumerated pair

  friend bool operator==(const Hit&, const Hit&) = default;
};

/// Pairs (R, S) = (MA, MB), R > 0, S >= 0, each with denominator <= bound
/// and value <= bound. Requires theta^2 rational, 0 < theta^2 < 4.
std::vector<Hit> apex_oracle(const Rational& theta_sq, std::uint32_t bound,
                             kernels::Exec exec = kernels::Exec::Parallel);

/// Pairs (R, S) = (MB, MC) in the same box; x0 = (R^2 - S^2)/4. Requires
/// Phi^2 rational and positive.
std::vector<Hit> base_oracle(const Rational& phi_sq, std::uint32_t bound,
                             kernels::Exec exec = kernels::Exec::Parallel);

/// Recomputes the distance equations of the hit's family.
bool verify_hit(const Hit& h);

/// Total order: (height, value) of each source entry, then of the distances.
bool hit_less(const Hit& a, const Hit& b);

struct CrossCheck {
  std::size_t hits = 0;
  std::size_t constructed = 0;  // constructed points inside the search box
  std::size_t missing = 0;      // constructed points the oracle did not find
  std::size_t unverified = 0;   // hits or constructed points failing re-verification
  std::vector<std::string> problems;

  bool ok() const { return missing == 0 && unverified == 0; }
};

/// Oracle output against the psi-sweep (psi of height <= bound) and the
/// witness construction, for rational theta^2.
CrossCheck check_apex_against_construct(const Rational& theta_sq, std::uint32_t bound,
                                        kernels::Exec exec = kernels::Exec::Parallel);
/// Oracle output against the N-sweep of the rational-altitude construction.
CrossCheck check_base_against_construct(const Rational& phi_sq, std::uint32_t bound,
                                        kernels::Exec exec = kernels::Exec::Parallel);

struct SweepReport {
  std::size_t cases = 0;
  std::size_t suitable = 0;
  std::vector<std::string> counterexamples;
  std::size_t mutated_cases = 0;
  std::size_t mutated_suitable = 0;

  bool ok() const { return counterexamples.empty(); }
};

/// Every apex witness (p, q, s) of height <= bound must be decided suitable
/// with a witness regenerating the same theta^2. With `mutate`, theta^2 =
/// A +- sqrt(B) is also perturbed (A +- 1, B +- 1) and any suitable verdict
/// must carry a regenerating witness.
SweepReport witness_sweep_equivalence(std::uint32_t bound, bool mutate = false,
                                      kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace isodist::oracle
