#pragma once

#include "isodist/exact_real.hpp"
#include "isodist/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace isodist {

/// coeff * sqrt(radicand)
struct RadicalTerm {
  Rational coeff;
  Rational radicand;

  friend bool operator==(const RadicalTerm&, const RadicalTerm&) = default;
};

/// rational_part + sum of coeff_i * sqrt(radicand_i), in normal form:
///   - every radicand is positive and not a rational square,
///   - no two radicands are associated (their product is not a square),
///   - every coeff is nonzero, terms are sorted by radicand.
///
/// Radicands are integers with square factors below 1000 (and any square
/// cofactor) pulled out, so sqrt(675/256) reads 15/16*sqrt(3). Larger hidden
/// square factors are merged by the associated-radical test, keeping the
/// radicand of least height. Distinct
/// normal-form radicals are linearly independent over Q, which makes
/// is_zero() and operator== exact.
class RadicalSum {
 public:
  RadicalSum() = default;
  RadicalSum(Rational r)  // NOLINT(google-explicit-constructor)
      : rational_(std::move(r)) {}

  /// Folds square radicands, merges associated radicals, drops zero terms.
  static RadicalSum normalize(Rational rational_part, const std::vector<RadicalTerm>& raw);
  /// coeff * sqrt(radicand), normalized.
  static RadicalSum radical(const Rational& coeff, const Rational& radicand);
  static RadicalSum parse(std::string_view text);

  const Rational& rational_part() const { return rational_; }
  const std::vector<RadicalTerm>& terms() const { return terms_; }

  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_.is_zero(); }
  /// Number of nonzero components (rational part counts as one).
  std::size_t component_count() const { return terms_.size() + (rational_.is_zero() ? 0 : 1); }

  /// Exact sign. Nonzero values are resolved by interval refinement, which
  /// always terminates because a nonzero normal form is never zero.
  int sign() const;

  /// Square of a value with at most two components, as a canonical ExactReal.
  ExactReal square() const;

  RadicalSum operator-() const;
  friend RadicalSum operator+(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b);
  friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);

  /// Value equality.
  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return (a - b).is_zero(); }
  /// Same normal form, term for term.
  bool identical(const RadicalSum& o) const { return rational_ == o.rational_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  Rational rational_;
  std::vector<RadicalTerm> terms_;
};

RadicalSum radsum_normalize(const Rational& rational_part, const std::vector<RadicalTerm>& raw);
ExactReal radsum_square(const RadicalSum& x);

inline std::ostream& operator<<(std::ostream& os, const RadicalSum& x) { return os << x.to_string(); }

}  // namespace isodist
