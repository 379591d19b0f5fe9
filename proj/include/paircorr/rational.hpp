#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

// Exact rational arithmetic on top of GMP. Every value is kept in canonical
// form (positive denominator, gcd(|num|, den) = 1), so equality is structural
// and comparisons, floors and ceilings are exact. All operations are pure and
// values are immutable after construction; they are safe to share across
// threads.

namespace paircorr {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}                   // NOLINT(google-explicit-constructor)
  explicit Rational(std::uint64_t n) { mpz_set_ui(mpq_numref(v_.get_mpq_t()), n); }
  explicit Rational(const BigInt& n) : v_(n) {}

  // num/den in any form; reduced to canonical. Throws on zero denominator.
  Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p/q", plain integers, and exact decimal literals ("1.25" becomes
  // 5/4 via p/10^k, never through binary floating point). Optional leading
  // sign; nothing else. Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }

  // Greatest integer <= x (toward negative infinity).
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
    return q;
  }

  // Least integer >= x.
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), mpq_numref(v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()));
    return q;
  }

  // Fractional part {x} in [0, 1).
  Rational mod1() const {
    Rational r;
    mpz_class f = floor();
    mpq_class fq(f);
    mpq_sub(r.v_.get_mpq_t(), v_.get_mpq_t(), fq.get_mpq_t());
    return r;
  }

  // Canonical text form "p/q"; "/q" omitted when q = 1.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  static int cmp(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
  }
  // Comparison against p/q without building a temporary.
  int cmp_ui(unsigned long p, unsigned long q) const {
    return mpq_cmp_ui(v_.get_mpq_t(), p, q);
  }

 private:
  mpq_class v_;
};

// Distance on the unit circle: min({x-y}, 1-{x-y}), always in [0, 1/2].
// Inputs must lie in [0, 1); throws std::domain_error otherwise.
Rational circle_distance(const Rational& x, const Rational& y);

// Rounds x to `significant_digits` decimal digits (round half to even) and
// renders it without trailing zeros. Exact zero renders as "0".
std::string to_decimal(const Rational& x, int significant_digits = 12);

}  // namespace paircorr
