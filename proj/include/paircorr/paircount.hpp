#pragma once

#include <cstdint>
#include <vector>

#include "paircorr/rational.hpp"
#include "paircorr/sequence.hpp"

// Ground-truth evaluation of the pair correlation function
//
//   F_N(s) = (1/N) #{ 1 <= k != l <= N : ||x_k - x_l|| <= s/N }
//
// over exact rationals: a literal quadratic count and an O(N log N) sorted
// sliding-window count. The two engines agree bit-exactly on every input;
// there is no epsilon anywhere. Both are pure and safe to call concurrently.

namespace paircorr {

struct PairCountResult {
  std::uint64_t ordered_pair_count = 0;  // ordered pairs k != l within threshold
  Rational f_value;                      // ordered_pair_count / n
  std::uint64_t n = 0;
  Rational s;
};

// Literal enumeration of all ordered pairs (k, l), k != l. O(N^2).
// Throws std::domain_error for s < 0 or an empty point set.
PairCountResult pair_count_naive(const PointSet& pts, const Rational& s);

// Sorts the points, then counts, for each point, the neighbours within
// s/N in a window that wraps once around the circle. Identical result to
// pair_count_naive on every input.
PairCountResult pair_count_sorted(const PointSet& pts, const Rational& s);

// Sorted view of a point set, reused across many thresholds (sweeps and
// verification loops pay the sort once instead of per query).
class SortedPoints {
 public:
  explicit SortedPoints(const PointSet& pts);

  std::size_t size() const { return sorted_.size(); }
  std::uint64_t ordered_pair_count(const Rational& s) const;
  PairCountResult result(const Rational& s) const;

 private:
  std::uint64_t count_at_radius(const Rational& r) const;

  std::vector<Rational> sorted_;
};

}  // namespace paircorr
