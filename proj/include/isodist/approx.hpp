#pragma once

#include "isodist/exact_real.hpp"
#include "isodist/quadratic.hpp"
#include "isodist/rational.hpp"

#include <string>

namespace isodist {

class RadicalSum;

inline constexpr int kMaxApproxDigits = 10000;

/// Correctly rounded decimal with `digits` significant digits, fixed
/// notation. Irrational values are bracketed by exact rational intervals
/// that are refined until both ends round to the same string.
std::string approx(const Rational& x, int digits);
std::string approx(const ExactReal& x, int digits);
std::string approx(const Quadratic& x, int digits);
std::string approx(const RadicalSum& x, int digits);

/// Sign of a normal-form radical sum, certified by interval refinement.
int certified_sign(const RadicalSum& x);

}  // namespace isodist
