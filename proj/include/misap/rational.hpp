#pragma once

// Exact rational arithmetic on top of GMP. Values are kept canonical
// (gcd(num, den) = 1, den > 0) at all times.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace misap {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT: implicit by design
  Rational(int n) : v_(n) {}             // NOLINT
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Parses "num/den" or a plain integer.
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  // Always renders as "num/den", e.g. "3/2", "1/1", "-4/3".
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

inline Rational rational_pow(const Rational& r, unsigned k) {
  Rational acc(1);
  for (unsigned i = 0; i < k; ++i) acc *= r;
  return acc;
}

}  // namespace misap
