#pragma once

#include "isodist/quadratic.hpp"
#include "isodist/rational.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace isodist {

/// a + s*sqrt(b) with b > 0 and sqrt(b) irrational.
struct Surd {
  Rational a;
  Sign s = Sign::Plus;
  Rational b;

  friend bool operator==(const Surd&, const Surd&) = default;
};

/// A rational, or a canonical quadratic surd. Structural equality coincides
/// with equality of the real numbers represented.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(Rational r)  // NOLINT(google-explicit-constructor)
      : v_(std::move(r)) {}

  /// Canonicalizing constructor for a + s*sqrt(b); rejects b < 0.
  static ExactReal make(const Rational& a, Sign s, const Rational& b);
  static ExactReal from_quadratic(const Quadratic& q);
  static ExactReal parse(std::string_view text);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const Surd& surd() const { return std::get<Surd>(v_); }

  /// The rational part a (the whole value when rational).
  const Rational& rational_part() const;
  Quadratic to_quadratic() const;
  int sign() const { return to_quadratic().sign(); }

  std::string to_string() const;

  friend bool operator==(const ExactReal&, const ExactReal&) = default;

 private:
  std::variant<Rational, Surd> v_;
};

/// Rat(a + s*sqrt(b)) when sqrt(b) is rational, else Surd(a, s, b).
ExactReal make_exact(const Rational& a, Sign s, const Rational& b);

inline std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << x.to_string(); }

}  // namespace isodist
