#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "paircorr/rational.hpp"

// Closed-form evaluation of F_N(s) for the base-2 van der Corput sequence.
// With N = sum_k e_k 2^k (e_M = 1 the leading digit),
//
//   F_N(s) = (1/N) sum_{k=0}^{M} e_k * ( floor(s 2^k / N)
//              + sum_{l=k+1}^{M} e_l * 2 * ceil(floor(s 2^(l+1) / N) / 2) ) * 2^(k+1)
//
// evaluated in O(log N) big-integer operations, with no dependence on the
// sequence points themselves. The formula reproduces the pair-counting
// oracles exactly for 0 <= s < N/2 (verified exhaustively by the test
// suite); beyond N/2 the counting windows wrap the circle and the formula
// overcounts, so f_closed_form refuses that region.

namespace paircorr {

// Raised when s falls outside the validated domain s < N/2.
class ClosedFormDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Canonical 2-ary expansion, least-significant digit first, leading digit 1.
class BinaryDigits {
 public:
  explicit BinaryDigits(std::uint64_t n);  // throws std::domain_error for n = 0

  int m() const { return static_cast<int>(digits_.size()) - 1; }
  bool bit(int k) const { return digits_[static_cast<std::size_t>(k)] != 0; }
  const std::vector<std::uint8_t>& digits() const { return digits_; }
  std::uint64_t value() const;

 private:
  std::vector<std::uint8_t> digits_;
};

inline BinaryDigits binary_digits(std::uint64_t n) { return BinaryDigits(n); }

// Ordered pairs within threshold s/n among 2^k points equispaced at 2^(-k):
// floor(s 2^k / n) * 2^(k+1). Valid while the window does not wrap
// (s < n/2); the caller polices validity.
BigInt count_a(const Rational& s, int k, std::uint64_t n);

// Ordered cross pairs between a block of points at spacing 2^(-k) and
// `block2_size` points at the odd multiples of 2^(-(k+1)):
// ceil(floor(s 2^(k+1) / n_eff) / 2) * block2_size * 2. Same validity rule.
BigInt count_b(const Rational& s, int k, std::uint64_t n_eff, std::uint64_t block2_size);

// F_N(s) through the closed form. Requires n >= 1 and 0 <= s < n/2
// (ClosedFormDomainError directs callers to the oracle engines otherwise).
// n = 1 returns 0 directly for every s >= 0: a single point has no pairs.
Rational f_closed_form(std::uint64_t n, const Rational& s);

// The formula exactly as written, without the validity-domain guard. For
// s >= n/2 the value no longer matches F_N; exposed for boundary mapping.
Rational f_closed_form_raw(std::uint64_t n, const Rational& s);

// Brute-force pair counts split at the largest power of two 2^m <= n:
// a_count over the first 2^m indices, b_count over ordered (i, j) pairs
// with i <= 2^m < j, c_count over the rest. Satisfies
// a_count + 2 b_count + c_count = n * F_n(s). Enumerates the actual
// sequence points, deliberately independent of count_a / count_b. O(n^2).
struct DecompositionCounts {
  std::uint64_t a_count = 0;
  std::uint64_t b_count = 0;
  std::uint64_t c_count = 0;
  int m = 0;
};

DecompositionCounts decomposition_counts(std::uint64_t n, const Rational& s);

}  // namespace paircorr
