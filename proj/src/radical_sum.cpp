#include "isodist/radical_sum.hpp"

#include "isodist/approx.hpp"

#include <algorithm>

namespace isodist {

namespace {

bool represents_better(const Rational& a, const Rational& b) { return height_compare(a, b) < 0; }

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<unsigned long> out;
    constexpr unsigned long kLimit = 1000;
    std::vector<bool> composite(kLimit + 1, false);
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// sqrt(r) = k * sqrt(m) with m a positive integer stripped of square factors
// below 1000 and of a final square cofactor.
RadicalTerm reduce(const RadicalTerm& t) {
  mpz_class m = t.radicand.num() * t.radicand.den();
  mpz_class k = 1;
  for (unsigned long p : small_primes()) {
    const unsigned long p2 = p * p;
    if (mpz_cmp_ui(m.get_mpz_t(), p2) < 0) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p2) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p2);
      k *= p;
    }
  }
  if (m > 1 && mpz_perfect_square_p(m.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
    k *= root;
    m = 1;
  }
  return {t.coeff * Rational(k, t.radicand.den()), Rational(m)};
}

}  // namespace

RadicalSum RadicalSum::normalize(Rational rational_part, const std::vector<RadicalTerm>& raw) {
  RadicalSum out;
  out.rational_ = std::move(rational_part);
  for (const RadicalTerm& raw_term : raw) {
    if (raw_term.radicand.sign() < 0) throw DomainError("negative radicand " + raw_term.radicand.to_string());
    if (raw_term.coeff.is_zero() || raw_term.radicand.is_zero()) continue;
    if (auto root = rational_sqrt(raw_term.radicand)) {
      out.rational_ += raw_term.coeff * *root;
      continue;
    }
    const RadicalTerm t = reduce(raw_term);
    bool merged = false;
    for (RadicalTerm& cur : out.terms_) {
      auto k = rational_sqrt(t.radicand * cur.radicand);
      if (!k) continue;
      // sqrt(r) = k / r_cur * sqrt(r_cur)
      if (represents_better(t.radicand, cur.radicand)) {
        cur.coeff = cur.coeff * *k / t.radicand + t.coeff;
        cur.radicand = t.radicand;
      } else {
        cur.coeff += t.coeff * *k / cur.radicand;
      }
      merged = true;
      break;
    }
    if (!merged) out.terms_.push_back(t);
  }
  std::erase_if(out.terms_, [](const RadicalTerm& t) { return t.coeff.is_zero(); });
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const RadicalTerm& a, const RadicalTerm& b) { return a.radicand < b.radicand; });
  return out;
}

RadicalSum radsum_normalize(const Rational& rational_part, const std::vector<RadicalTerm>& raw) {
  return RadicalSum::normalize(rational_part, raw);
}

RadicalSum RadicalSum::radical(const Rational& coeff, const Rational& radicand) {
  return normalize(Rational(), {{coeff, radicand}});
}

int RadicalSum::sign() const {
  if (terms_.empty()) return rational_.sign();
  if (terms_.size() == 1) {
    return Quadratic(rational_, terms_[0].coeff, terms_[0].radicand).sign();
  }
  return certified_sign(*this);
}

ExactReal RadicalSum::square() const {
  if (component_count() > 2) {
    throw DomainError("radsum_square: more than two components in " + to_string());
  }
  if (terms_.empty()) return ExactReal(rational_ * rational_);
  if (terms_.size() == 1) {
    const RadicalTerm& t = terms_[0];
    const Rational cross = rational_ * t.coeff;
    return make_exact(rational_ * rational_ + t.coeff * t.coeff * t.radicand, sign_of(cross.sign()),
                      Rational(4) * cross * cross * t.radicand);
  }
  const RadicalTerm& a = terms_[0];
  const RadicalTerm& b = terms_[1];
  const Rational cross = a.coeff * b.coeff;
  return make_exact(a.coeff * a.coeff * a.radicand + b.coeff * b.coeff * b.radicand,
                    sign_of(cross.sign()), Rational(4) * cross * cross * a.radicand * b.radicand);
}

ExactReal radsum_square(const RadicalSum& x) { return x.square(); }

RadicalSum RadicalSum::operator-() const {
  RadicalSum out = *this;
  out.rational_ = -out.rational_;
  for (RadicalTerm& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RadicalSum operator+(const RadicalSum& a, const RadicalSum& b) {
  std::vector<RadicalTerm> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return RadicalSum::normalize(a.rational_ + b.rational_, raw);
}

RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) { return a + (-b); }

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
  std::vector<RadicalTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size() + a.terms_.size() + b.terms_.size());
  for (const RadicalTerm& t : b.terms_) raw.push_back({a.rational_ * t.coeff, t.radicand});
  for (const RadicalTerm& t : a.terms_) raw.push_back({b.rational_ * t.coeff, t.radicand});
  for (const RadicalTerm& s : a.terms_) {
    for (const RadicalTerm& t : b.terms_) raw.push_back({s.coeff * t.coeff, s.radicand * t.radicand});
  }
  return RadicalSum::normalize(a.rational_ * b.rational_, raw);
}

std::string RadicalSum::to_string() const {
  std::string out;
  for (const RadicalTerm& t : terms_) {
    const Rational mag = abs(t.coeff);
    if (t.coeff.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "sqrt(" + t.radicand.to_string() + ")";
  }
  if (out.empty()) return rational_.to_string();
  if (rational_.sign() > 0) out += "+" + rational_.to_string();
  if (rational_.sign() < 0) out += rational_.to_string();
  return out;
}

}  // namespace isodist
