#include "isodist/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace isodist {

namespace {

void sort_by_height(std::vector<Rational>& v) { std::sort(v.begin(), v.end(), HeightLess{}); }

}  // namespace

std::vector<Rational> rationals_by_height(std::uint32_t bound, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  if (bound == 0) return out;
  const long b = static_cast<long>(bound);
  for (long d = 1; d <= b; ++d) {
    for (long n = 0; n <= b; ++n) {
      if (std::gcd(n, d) != 1) continue;
      const Rational pos(n, d);
      if (lo <= pos && pos <= hi) out.push_back(pos);
      if (n != 0) {
        const Rational neg = -pos;
        if (lo <= neg && neg <= hi) out.push_back(neg);
      }
    }
  }
  sort_by_height(out);
  return out;
}

std::vector<Rational> rationals_in_box(std::uint32_t bound, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  if (bound == 0) return out;
  const long b = static_cast<long>(bound);
  for (long d = 1; d <= b; ++d) {
    for (long n = 0; n <= b * d; ++n) {
      if (std::gcd(n, d) != 1) continue;
      const Rational pos(n, d);
      if (lo <= pos && pos <= hi) out.push_back(pos);
      if (n != 0) {
        const Rational neg = -pos;
        if (lo <= neg && neg <= hi) out.push_back(neg);
      }
    }
  }
  sort_by_height(out);
  return out;
}

Rational SternBrocotWalk::next() {
  if (!zero_done_) {
    zero_done_ = true;
    return Rational();
  }
  if (pending_negative_) {
    pending_negative_ = false;
    return -last_;
  }
  if (index_ == level_.size()) {
    level_.swap(next_level_);
    next_level_.clear();
    index_ = 0;
  }
  const Node node = level_[index_++];
  const mpz_class mn = node.ln + node.rn;
  const mpz_class md = node.ld + node.rd;
  next_level_.push_back(Node{node.ln, node.ld, mn, md});
  next_level_.push_back(Node{mn, md, node.rn, node.rd});
  last_ = Rational(mn, md);
  pending_negative_ = true;
  return last_;
}

}  // namespace isodist
