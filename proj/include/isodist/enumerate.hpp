#pragma once

#include "isodist/rational.hpp"

#include <cstdint>
#include <vector>

namespace isodist {

/// All rationals x with lo <= x <= hi and height(x) <= bound, ordered by
/// height then value.
std::vector<Rational> rationals_by_height(std::uint32_t bound, const Rational& lo, const Rational& hi);

/// All rationals x with lo <= x <= hi whose denominator is <= bound and
/// |x| <= bound ("box" bound; a superset of the height bound), ordered by
/// height then value.
std::vector<Rational> rationals_in_box(std::uint32_t bound, const Rational& lo, const Rational& hi);

/// Breadth-first walk of the Stern-Brocot tree, extended to all of Q:
/// 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 2/3, ...
class SternBrocotWalk {
 public:
  Rational next();

 private:
  struct Node {
    mpz_class ln, ld, rn, rd;  // bounds ln/ld < node < rn/rd
  };
  std::vector<Node> level_{Node{0, 1, 1, 0}};
  std::vector<Node> next_level_;
  std::size_t index_ = 0;
  bool zero_done_ = false;
  bool pending_negative_ = false;
  Rational last_;
};

}  // namespace isodist
