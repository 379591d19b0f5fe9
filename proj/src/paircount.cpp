#include "paircorr/paircount.hpp"

#include <algorithm>
#include <stdexcept>

namespace paircorr {

namespace {

void check_inputs(const PointSet& pts, const Rational& s) {
  if (pts.empty()) throw std::domain_error("pair count: empty point set");
  if (s.sign() < 0) throw std::domain_error("pair count: s must be >= 0");
  // ordered_pair_count is at most n(n-1); keep it inside uint64
  if (pts.size() > 0xFFFFFFFFull) throw std::domain_error("pair count: point set too large");
}

PairCountResult make_result(std::uint64_t count, std::uint64_t n, const Rational& s) {
  return PairCountResult{count, Rational(BigInt(count), BigInt(n)), n, s};
}

}  // namespace

PairCountResult pair_count_naive(const PointSet& pts, const Rational& s) {
  check_inputs(pts, s);
  const std::size_t n = pts.size();
  const Rational r = s / Rational(std::uint64_t(n));
  std::uint64_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (l == k) continue;
      if (circle_distance(pts[k], pts[l]) <= r) ++count;
    }
  }
  return make_result(count, n, s);
}

PairCountResult pair_count_sorted(const PointSet& pts, const Rational& s) {
  check_inputs(pts, s);
  return SortedPoints(pts).result(s);
}

SortedPoints::SortedPoints(const PointSet& pts) : sorted_(pts.points()) {
  if (sorted_.size() > 0xFFFFFFFFull) throw std::domain_error("pair count: point set too large");
  std::sort(sorted_.begin(), sorted_.end());
}

PairCountResult SortedPoints::result(const Rational& s) const {
  return make_result(ordered_pair_count(s), sorted_.size(), s);
}

std::uint64_t SortedPoints::ordered_pair_count(const Rational& s) const {
  if (sorted_.empty()) throw std::domain_error("pair count: empty point set");
  if (s.sign() < 0) throw std::domain_error("pair count: s must be >= 0");
  return count_at_radius(s / Rational(std::uint64_t(sorted_.size())));
}

// For each point x in ascending order, count the points inside the closed
// window [x - r, x + r] mod 1, minus the point itself. With r < 1/2 the
// window is shorter than the circle, so each end wraps at most once:
// a low end below 0 counts a suffix of the array, a high end at or above 1
// counts a prefix. All window bounds grow with x, so every boundary index is
// a forward-only cursor and the whole pass is O(n) after the sort.
std::uint64_t SortedPoints::count_at_radius(const Rational& r) const {
  const std::size_t n = sorted_.size();
  const std::uint64_t nn = n;
  if (r.cmp_ui(1, 2) >= 0) return nn * (nn - 1);  // threshold covers the whole circle

  const Rational one_minus_r = Rational(1) - r;
  std::size_t hi_in = 0;    // first index with p > x + r          (x + r < 1)
  std::size_t hi_wrap = 0;  // first index with p > x + r - 1      (x + r >= 1)
  std::size_t lo_in = 0;    // first index with p >= x - r         (x - r >= 0)
  std::size_t lo_wrap = 0;  // first index with p >= x - r + 1     (x - r < 0)
  std::uint64_t total = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const Rational& x = sorted_[i];

    long long points_le_hi;  // # points with value <= x + r, counting wrap as n + prefix
    if (x < one_minus_r) {
      const Rational hi = x + r;
      while (hi_in < n && sorted_[hi_in] <= hi) ++hi_in;
      points_le_hi = static_cast<long long>(hi_in);
    } else {
      const Rational hi = x - one_minus_r;  // = x + r - 1
      while (hi_wrap < n && sorted_[hi_wrap] <= hi) ++hi_wrap;
      points_le_hi = static_cast<long long>(n + hi_wrap);
    }

    long long points_lt_lo;  // # points with value < x - r, counting wrap as suffix - n
    if (x < r) {
      const Rational lo = x + one_minus_r;  // = x - r + 1
      while (lo_wrap < n && sorted_[lo_wrap] < lo) ++lo_wrap;
      points_lt_lo = static_cast<long long>(lo_wrap) - static_cast<long long>(n);
    } else {
      const Rational lo = x - r;
      while (lo_in < n && sorted_[lo_in] < lo) ++lo_in;
      points_lt_lo = static_cast<long long>(lo_in);
    }

    total += static_cast<std::uint64_t>(points_le_hi - points_lt_lo - 1);
  }
  return total;
}

}  // namespace paircorr
