#include "paircorr/closedform.hpp"

#include <bit>

#include "paircorr/paircount.hpp"
#include "paircorr/sequence.hpp"

namespace paircorr {

BinaryDigits::BinaryDigits(std::uint64_t n) {
  if (n == 0) throw std::domain_error("binary_digits: N must be >= 1");
  for (std::uint64_t v = n; v != 0; v >>= 1) digits_.push_back(v & 1u);
}

std::uint64_t BinaryDigits::value() const {
  std::uint64_t v = 0;
  for (std::size_t k = digits_.size(); k-- > 0;) v = (v << 1) | digits_[k];
  return v;
}

namespace {

// floor(s * 2^e / den_n) for s = num/..., den_n = den(s) * n, s >= 0
BigInt floor_scaled(const BigInt& num, const BigInt& den_n, int e) {
  BigInt t;
  mpz_mul_2exp(t.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), den_n.get_mpz_t());
  return t;
}

}  // namespace

BigInt count_a(const Rational& s, int k, std::uint64_t n) {
  const BigInt den_n = s.denominator() * BigInt(static_cast<unsigned long>(n));
  BigInt t = floor_scaled(s.numerator(), den_n, k);
  mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(k + 1));
  return t;
}

BigInt count_b(const Rational& s, int k, std::uint64_t n_eff, std::uint64_t block2_size) {
  const BigInt den_n = s.denominator() * BigInt(static_cast<unsigned long>(n_eff));
  BigInt f = floor_scaled(s.numerator(), den_n, k + 1);
  BigInt c;
  mpz_cdiv_q_ui(c.get_mpz_t(), f.get_mpz_t(), 2);
  return c * BigInt(static_cast<unsigned long>(block2_size)) * 2;
}

Rational f_closed_form_raw(std::uint64_t n, const Rational& s) {
  if (n == 0) throw std::domain_error("closed form: N must be >= 1");
  if (s.sign() < 0) throw std::domain_error("closed form: s must be >= 0");
  const BinaryDigits digits(n);
  const BigInt num = s.numerator();
  const BigInt den_n = s.denominator() * BigInt(static_cast<unsigned long>(n));

  // Walk digits from the top so `suffix` always holds
  // sum_{l > k} e_l * 2 * ceil(floor(s 2^(l+1) / N) / 2).
  BigInt total = 0;
  BigInt suffix = 0;
  for (int k = digits.m(); k >= 0; --k) {
    if (!digits.bit(k)) continue;
    BigInt term = floor_scaled(num, den_n, k) + suffix;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(k + 1));
    total += term;
    BigInt f = floor_scaled(num, den_n, k + 1);
    if (mpz_odd_p(f.get_mpz_t())) f += 1;  // 2 * ceil(f/2)
    suffix += f;
  }
  return Rational(total, BigInt(static_cast<unsigned long>(n)));
}

Rational f_closed_form(std::uint64_t n, const Rational& s) {
  if (n == 0) throw std::domain_error("closed form: N must be >= 1");
  if (s.sign() < 0) throw std::domain_error("closed form: s must be >= 0");
  if (n == 1) return Rational(0);
  // validated domain: s < n/2
  if (Rational::cmp(s + s, Rational(n)) >= 0)
    throw ClosedFormDomainError(
        "s outside validated closed-form domain (requires s < N/2); use the naive or sorted oracle");
  return f_closed_form_raw(n, s);
}

DecompositionCounts decomposition_counts(std::uint64_t n, const Rational& s) {
  if (n < 2) throw std::domain_error("decomposition_counts: N must be >= 2");
  if (s.sign() < 0) throw std::domain_error("decomposition_counts: s must be >= 0");

  const int m = std::bit_width(n) - 1;  // largest m with 2^m <= n
  const std::size_t split = std::size_t{1} << m;
  const PointSet pts = vdc_prefix(n, 2);
  const Rational r = s / Rational(n);

  DecompositionCounts out;
  out.m = m;
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < split; ++j)
      if (i != j && circle_distance(pts[i], pts[j]) <= r) ++out.a_count;
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = split; j < n; ++j)
      if (circle_distance(pts[i], pts[j]) <= r) ++out.b_count;
  for (std::size_t i = split; i < n; ++i)
    for (std::size_t j = split; j < n; ++j)
      if (i != j && circle_distance(pts[i], pts[j]) <= r) ++out.c_count;
  return out;
}

}  // namespace paircorr
