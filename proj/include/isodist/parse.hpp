#pragma once

#include "isodist/exact_real.hpp"
#include "isodist/radical_sum.hpp"
#include "isodist/rational.hpp"

#include <string_view>
#include <vector>

namespace isodist {

// Text grammar shared by the library and the CLI (whitespace-insensitive):
//   rational     := ['-'] digits ['/' digits]
//   radical      := 'sqrt(' rational ')'
//   term         := rational | rational '*' radical | radical
//   expression   := ['+'|'-'] term (('+'|'-') term)*
// An ExactReal is an expression with at most one radical after normalization.

Rational parse_rational(std::string_view text);
/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);
/// "+", "-", "1", "-1", "+1".
Sign parse_sign(std::string_view text);

}  // namespace isodist
