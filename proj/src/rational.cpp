#include "paircorr/rational.hpp"

#include <algorithm>
#include <cctype>

namespace paircorr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt digits_to_int(std::string_view s) {
  return BigInt(std::string(s), 10);
}

void mul_pow10(BigInt& z, long k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  z *= p;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view t = text;
  bool negative = false;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  if (t.empty()) throw std::invalid_argument("Rational::parse: empty value");

  Rational result;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    std::string_view p = t.substr(0, slash);
    std::string_view q = t.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw std::invalid_argument("Rational::parse: malformed fraction '" + std::string(text) + "'");
    BigInt den = digits_to_int(q);
    if (sgn(den) == 0)
      throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    result = Rational(digits_to_int(p), den);
  } else if (auto dot = t.find('.'); dot != std::string_view::npos) {
    std::string_view ip = t.substr(0, dot);
    std::string_view fp = t.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("Rational::parse: malformed decimal '" + std::string(text) + "'");
    BigInt den = 1;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    BigInt num = digits_to_int(ip) * den + digits_to_int(fp);
    result = Rational(num, den);
  } else {
    if (!all_digits(t))
      throw std::invalid_argument("Rational::parse: malformed number '" + std::string(text) + "'");
    result = Rational(digits_to_int(t));
  }
  return negative ? -result : result;
}

Rational circle_distance(const Rational& x, const Rational& y) {
  if (x.sign() < 0 || x.cmp_ui(1, 1) >= 0 || y.sign() < 0 || y.cmp_ui(1, 1) >= 0)
    throw std::domain_error("circle_distance: inputs must lie in [0, 1)");
  Rational d = x - y;
  if (d.sign() < 0) d += Rational(1);
  // d = {x - y} in [0, 1); fold onto [0, 1/2]
  if (d.cmp_ui(1, 2) > 0) d = Rational(1) - d;
  return d;
}

std::string to_decimal(const Rational& x, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("to_decimal: need at least 1 digit");
  if (x.is_zero()) return "0";

  const bool negative = x.sign() < 0;
  BigInt p = x.numerator();
  if (negative) p = -p;
  const BigInt q = x.denominator();

  // Decimal exponent e with 10^e <= p/q < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  auto less_than_pow10 = [&](long k) {
    // p/q < 10^k ?
    BigInt lhs = p, rhs = q;
    if (k >= 0) mul_pow10(rhs, k);
    else mul_pow10(lhs, -k);
    return lhs < rhs;
  };
  while (less_than_pow10(e)) --e;
  while (!less_than_pow10(e + 1)) ++e;

  // Scale to an integer with `significant_digits` digits, round half to even.
  long shift = significant_digits - 1 - e;
  BigInt num = p, den = q;
  if (shift >= 0) mul_pow10(num, shift);
  else mul_pow10(den, -shift);
  BigInt digits, rem;
  mpz_fdiv_qr(digits.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  rem *= 2;
  int c = cmp(rem, den);
  if (c > 0 || (c == 0 && mpz_odd_p(digits.get_mpz_t())))
    digits += 1;

  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // rounding overflowed into an extra digit (e.g. 999... -> 1000...)
    ds.pop_back();
    ++e;
  }

  std::string out;
  if (e >= significant_digits && e <= 20) {
    out = ds + std::string(e + 1 - significant_digits, '0');
  } else if (e >= 0 && e < significant_digits) {
    out = ds.substr(0, e + 1);
    std::string frac = ds.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (e < 0 && e >= -9) {
    std::string frac = std::string(-e - 1, '0') + ds;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    // extreme magnitudes: scientific form d.ddd...e<exp>
    std::string mant = ds;
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(e);
  }
  return negative ? "-" + out : out;
}

}  // namespace paircorr
