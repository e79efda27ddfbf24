#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace expdom {

using BigInt = boost::multiprecision::cpp_int;

// Exact dyadic rational num / 2^exp with exp >= 0.
//
// Normal form: exp == 0, or num odd and nonzero. Integers (including the
// self-contribution 2 of a dominating vertex) live at exp == 0 with an
// unrestricted numerator. Every operation and comparison is exact; the type
// has no floating-point path, so verdicts that compare accumulated weights
// against 1 can never be flipped by rounding.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long long value) : num_(value) {}  // implicit by design
  DyadicRational(BigInt numerator, int exponent);

  // 2^k for any integer k; negative k yields 1/2^|k|.
  static DyadicRational pow2(int k);

  const BigInt& numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& o);
  DyadicRational& operator-=(const DyadicRational& o);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) {
    a += b;
    return a;
  }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) {
    a -= b;
    return a;
  }
  friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);

  std::strong_ordering operator<=>(const DyadicRational& o) const;
  bool operator==(const DyadicRational& o) const {
    return exp_ == o.exp_ && num_ == o.num_;
  }

  // Exact comparison against the general fraction p/q (q > 0) by cross
  // multiplication: num * q <=> p * 2^exp.
  std::strong_ordering compare_fraction(long long p, long long q) const;

  // Lowest-terms fraction string: "0", "2", "-3/8", "9/16".
  std::string to_fraction_string() const;

 private:
  void normalize();

  BigInt num_ = 0;
  int exp_ = 0;
};

}  // namespace expdom
