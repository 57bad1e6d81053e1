#pragma once

// The set {(p^2 - 1)(q^2 - 1) : p, q rational, p, q >= 0} and its
// representations.

#include "isodist/kernels.hpp"
#include "isodist/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace isodist::omega {

/// (p, q) with p <= q and value = (p^2 - 1)(q^2 - 1).
struct Representation {
  Rational p;
  Rational q;
  Rational value;

  friend bool operator==(const Representation&, const Representation&) = default;
};

Rational omega_value(const Rational& p, const Rational& q);

/// Every representation with height(p), height(q) <= bound. For each p the
/// partner is forced: q^2 = 1 + omega/(p^2 - 1), so only p is enumerated.
/// Ordered by (height, value) of p, then of q.
std::vector<Representation> search_representations(const Rational& omega, std::uint32_t bound,
                                                   kernels::Exec exec = kernels::Exec::Parallel);

/// (z/y, z/x) for the first `count` primitive triples (m^2-n^2, 2mn, m^2+n^2),
/// m > n >= 1 coprime of opposite parity, ordered by m then n.
std::vector<Representation> pythagorean_reps_of_one(std::size_t count);

}  // namespace isodist::omega
