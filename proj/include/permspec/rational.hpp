#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "permspec/errors.hpp"

namespace permspec {

using BigInt = mpz_class;

// Exact rational with canonical representation: denominator > 0 and
// gcd(|num|, den) = 1 after every operation. Thin layer over GMP's mpq;
// the wrapper exists so construction always canonicalizes (mpq_class
// itself does not) and so printing is uniform ("p" or "p/q").
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
  Rational(long n) : v_(static_cast<long int>(n)) {}
  Rational(long long n) : v_(BigInt(std::to_string(n))) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw UsageError("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long long num, long long den)
      : Rational(BigInt(std::to_string(num)), BigInt(std::to_string(den))) {}

  const BigInt& num() const { return v_.get_num(); }
  const BigInt& den() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw UsageError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  const mpq_class& mpq() const { return v_; }

 private:
  mpq_class v_;
};

inline BigInt factorial_big(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;  // callers stay within n <= 12
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace permspec
