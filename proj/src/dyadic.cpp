#include "expdom/dyadic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace expdom {

namespace {

// x * 2^k without bit operations, which cpp_int forbids on negative values.
BigInt shifted(const BigInt& x, int k) {
  if (k == 0 || x.is_zero()) return x;
  return x * (BigInt(1) << k);
}

}  // namespace

DyadicRational::DyadicRational(BigInt numerator, int exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("dyadic exponent must be >= 0");
  normalize();
}

void DyadicRational::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && num_ % 2 == 0) {
    num_ /= 2;
    --exp_;
  }
}

DyadicRational DyadicRational::pow2(int k) {
  DyadicRational r;
  if (k >= 0) {
    r.num_ = BigInt(1) << k;
    r.exp_ = 0;
  } else {
    r.num_ = 1;
    r.exp_ = -k;
  }
  return r;
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  const int e = std::max(exp_, o.exp_);
  num_ = shifted(num_, e - exp_) + shifted(o.num_, e - o.exp_);
  exp_ = e;
  normalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) {
  return *this += -o;
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
  const int e = std::max(exp_, o.exp_);
  const BigInt lhs = shifted(num_, e - exp_);
  const BigInt rhs = shifted(o.num_, e - o.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering DyadicRational::compare_fraction(long long p, long long q) const {
  if (q <= 0) throw std::invalid_argument("fraction denominator must be positive");
  const BigInt lhs = num_ * q;
  const BigInt rhs = shifted(BigInt(p), exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string DyadicRational::to_fraction_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + (BigInt(1) << exp_).str();
}

}  // namespace expdom
