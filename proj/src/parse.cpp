#include "isodist/parse.hpp"

#include <cctype>
#include <string>

namespace isodist {

namespace {

constexpr const char* kGrammar =
    "expected [-]digits[/digits], c*sqrt(r), sqrt(r), joined by + or -";

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        s_.push_back(text[i]);
        origin_.push_back(i);
      }
    }
    origin_.push_back(text.size());
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const std::size_t at = origin_[pos_ < origin_.size() ? pos_ : origin_.size() - 1];
    throw ParseError("parse error at position " + std::to_string(at) + ": " + msg + " (" + kGrammar + ")",
                     at);
  }

  bool done() const { return pos_ == s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    if (s_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  /// Unsigned rational literal.
  Rational magnitude() {
    mpz_class n = digits();
    mpz_class d = 1;
    if (accept('/')) {
      d = digits();
      if (d == 0) fail("zero denominator");
    }
    return Rational(n, d);
  }

  Rational rational() {
    const bool neg = accept('-');
    Rational r = magnitude();
    return neg ? -r : r;
  }

  Rational radical() {
    if (!accept("sqrt(")) fail("expected sqrt(");
    Rational r = rational();
    if (r.sign() < 0) fail("negative radicand");
    if (!accept(')')) fail("expected )");
    return r;
  }

  void expression(Rational& constant, std::vector<RadicalTerm>& terms) {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      if (peek() == 's') {
        Rational r = radical();
        terms.push_back({Rational(negative ? -1 : 1), r});
      } else {
        Rational c = magnitude();
        if (negative) c = -c;
        if (accept('*')) {
          terms.push_back({c, radical()});
        } else {
          constant += c;
        }
      }
      if (done()) return;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        fail("unexpected character");
      }
    }
  }

 private:
  std::string s_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

RadicalSum parse_radical_sum(std::string_view text) {
  Parser p(text);
  if (p.done()) p.fail("empty input");
  Rational constant;
  std::vector<RadicalTerm> terms;
  p.expression(constant, terms);
  return RadicalSum::normalize(constant, terms);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Parser p(text);
  Rational r = p.rational();
  if (!p.done()) p.fail("trailing characters after rational");
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in list item " + std::to_string(out.size() + 1),
                       start + e.position());
    }
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

Sign parse_sign(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t == "+" || t == "1" || t == "+1") return Sign::Plus;
  if (t == "-" || t == "-1") return Sign::Minus;
  throw ParseError("parse error at position 0: expected a sign (+, -, 1, -1)", 0);
}

RadicalSum RadicalSum::parse(std::string_view text) { return parse_radical_sum(text); }

ExactReal ExactReal::parse(std::string_view text) {
  const RadicalSum x = parse_radical_sum(text);
  if (x.terms().empty()) return ExactReal(x.rational_part());
  if (x.terms().size() > 1) {
    throw ParseError("parse error at position 0: expected at most one radical (a+sqrt(b) or a-sqrt(b))", 0);
  }
  const RadicalTerm& t = x.terms()[0];
  return make_exact(x.rational_part(), sign_of(t.coeff.sign()), t.coeff * t.coeff * t.radicand);
}

}  // namespace isodist
