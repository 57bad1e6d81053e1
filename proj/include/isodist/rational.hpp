#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isodist {

/// Raised when an operation's precondition on exact values does not hold.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers; carries the byte offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

enum class Sign : int { Minus = -1, Plus = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Sign sign_of(int v) { return v < 0 ? Sign::Minus : Sign::Plus; }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Exact fraction in lowest terms, denominator positive, zero is 0/1.
///
/// Thin value wrapper over mpq_class so that every result is materialized
/// and canonical (gmpxx expression templates never escape this type).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// max(|numerator|, denominator)
  mpz_class height() const;

  std::string to_string() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_.get_str();
  }

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational square(const Rational& r);
/// 10^k for any integer k.
Rational pow10(long k);

/// Nonnegative s with s*s == r, if r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);
bool is_rational_square(const Rational& r);

/// Orders by height first, then by value.
struct HeightLess {
  bool operator()(const Rational& a, const Rational& b) const {
    const int c = cmp(a.height(), b.height());
    if (c != 0) return c < 0;
    return a < b;
  }
};

/// Three-way height-then-value comparison, usable in lexicographic chains.
int height_compare(const Rational& a, const Rational& b);

}  // namespace isodist
