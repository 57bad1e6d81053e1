#pragma once

// Triangles (theta, 2, theta) with A(0, Phi), B(-1, 0), C(1, 0), where
// Phi = sqrt(theta^2 - 1) is the main altitude.

#include "isodist/exact_real.hpp"
#include "isodist/kernels.hpp"
#include "isodist/radical_sum.hpp"
#include "isodist/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace isodist::base {

class BaseTriangle {
 public:
  /// Requires phi >= 0 with at most two components.
  explicit BaseTriangle(RadicalSum phi);

  /// Phi from theta^2 >= 1. Returns nothing when Phi^2 = x + s sqrt(y) does
  /// not denest into a sum of two rational square roots.
  static std::optional<BaseTriangle> from_theta_sq(const ExactReal& theta_sq);

  const RadicalSum& phi() const { return phi_; }
  const ExactReal& theta_sq() const { return theta_sq_; }

 private:
  RadicalSum phi_;
  ExactReal theta_sq_;
};

/// Phi = eps sqrt((p^2-1)(1-q^2)) + eps' sqrt(r^2 - p^2 q^2),
/// p >= 1 >= q >= 0, r >= pq.
struct BaseWitness {
  Rational p, q, r;
  Sign eps = Sign::Plus;
  Sign eps_prime = Sign::Plus;

  Rational e() const;
  Rational f() const;
  /// Throws DomainError on a violated range invariant.
  void validate() const;
  /// eps sqrt(e) + eps' sqrt(f), normalized.
  RadicalSum altitude() const;

  friend bool operator==(const BaseWitness&, const BaseWitness&) = default;
};

/// M(x0, y0) with y0^2 = e and rational distances to A, B, C.
struct BasePoint {
  Rational x0;
  Rational e;
  RadicalSum y0;
  Rational dist_a, dist_b, dist_c;
};

bool verify_witness(const BaseTriangle& t, const BaseWitness& w);

/// M(+-pq, eps sqrt(e)); one point when pq == 0.
std::vector<BasePoint> construct_points(const BaseTriangle& t, const BaseWitness& w);

/// Points on BC at |x0| = N f - 1/(4N) for rational f = Phi^2 > 0, N f >= 2.
std::vector<BasePoint> lemma31_points(const BaseTriangle& t, std::uint64_t n);
/// Least N with N f >= 2.
std::uint64_t lemma31_min_n(const Rational& f);
/// The witness (N f - 1/(4N), 1, N f + 1/(4N)).
BaseWitness lemma31_witness(const Rational& f, std::uint64_t n);

/// Witness from a point with MB = R, MC = S, MA = r and y0^2 = e > 0.
BaseWitness extract_witness(const Rational& x0, const Rational& e, const Rational& R, const Rational& S,
                            const Rational& r, const BaseTriangle& t);

/// Exact check of (x0+1)^2 + e = MB^2, (x0-1)^2 + e = MC^2 and
/// x0^2 + (Phi - y0)^2 = MA^2.
bool check_point(const BaseTriangle& t, const BasePoint& m);

/// For irrational theta^2: the ordinates of the two horizontal locus lines.
std::array<RadicalSum, 2> locus_lines(const BaseTriangle& t);

/// Components of Phi as (sign, square of magnitude).
struct Component {
  Sign sign;
  Rational square;
};
std::vector<Component> components(const RadicalSum& phi);

struct RationalRoute {
  std::uint64_t n = 0;  // 0 for the degenerate triangle Phi = 0
  BaseWitness witness;
};
struct Found {
  BaseWitness witness;
  std::size_t count = 0;  // witnesses found up to the bound
};
struct UnknownUpTo {
  std::uint32_t height = 0;
};
struct NotSuitable {
  std::string reason;
};
using Decision = std::variant<RationalRoute, Found, UnknownUpTo, NotSuitable>;

/// Rational theta^2 is always affirmative. Irrational theta^2 is decided only
/// as far as a bounded witness search goes, except when Phi cannot be a sum
/// of two rational square roots at all.
Decision decide(const ExactReal& theta_sq, std::uint32_t height,
                kernels::Exec exec = kernels::Exec::Parallel);

/// All witnesses with heights of p, q, r <= bound for irrational theta^2,
/// sorted. One-dimensional over p: the two components of Phi fix e and f.
std::vector<BaseWitness> search_witnesses(const BaseTriangle& t, std::uint32_t bound,
                                          kernels::Exec exec = kernels::Exec::Parallel);

/// Lexicographic (height, value) order on (p, q, r), then signs.
bool witness_less(const BaseWitness& a, const BaseWitness& b);

}  // namespace isodist::base
