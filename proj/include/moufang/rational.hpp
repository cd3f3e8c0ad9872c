#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "moufang/errors.hpp"

namespace moufang {

/// Exact rational scalar.
///
/// Thin value wrapper around GMP's mpq_class that keeps every value in
/// canonical form: lowest terms, positive denominator. All arithmetic is
/// exact and equality is decidable, so identity checks reduce to literal
/// equality of matrices.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}

  Rational(long num, long den) {
    if (den == 0)
      throw Error("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Strict parser for the canonical on-disk encoding: "p" or "p/q" with
  /// decimal integers, q > 0, gcd(|p|, q) = 1, no leading zeros, no "-0".
  static Rational parse(std::string_view s) {
    auto fail = [&](const char* why) {
      throw ParseError("invalid rational '" + std::string(s) + "': " + why);
    };
    auto is_canonical_uint = [](std::string_view d) {
      if (d.empty())
        return false;
      if (d.size() > 1 && d[0] == '0')
        return false;
      for (char c : d)
        if (c < '0' || c > '9')
          return false;
      return true;
    };

    std::string_view num = s;
    std::string_view den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
      if (den.find('/') != std::string_view::npos)
        fail("more than one '/'");
    }

    bool negative = !num.empty() && num[0] == '-';
    std::string_view mag = negative ? num.substr(1) : num;
    if (!is_canonical_uint(mag))
      fail("numerator is not a canonical decimal integer");
    if (negative && mag == "0")
      fail("negative zero");

    mpz_class p(std::string(num), 10);
    if (den.empty()) {
      Rational r;
      r.v_ = mpq_class(p);
      return r;
    }

    if (!is_canonical_uint(den) || den == "0")
      fail("denominator must be a positive canonical decimal integer");
    mpz_class q(std::string(den), 10);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1)
      fail("not in lowest terms");

    Rational r;
    r.v_ = mpq_class(p, q);
    // gcd == 1 and q > 0 were just verified; the value is already canonical.
    return r;
  }

  /// Canonical encoding: "p" when the denominator is 1, else "p/q".
  std::string str() const {
    if (v_.get_den() == 1)
      return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  const mpq_class& raw() const { return v_; }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero())
      throw Error("rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

/// Exact one-third and one-sixth, the recurring coefficients of the
/// triality decomposition and the Yamagutian.
inline const Rational& third() {
  static const Rational r(1, 3);
  return r;
}
inline const Rational& sixth() {
  static const Rational r(1, 6);
  return r;
}

} // namespace moufang
