#pragma once

#include <cstdint>
#include <vector>

#include "paircorr/rational.hpp"

// Van der corput sequence generation via the radical-inverse function.
// Indexing convention: x_1 = 0 and x_i = g_b(i-1) for i >= 2; since
// g_b(0) = 0 this is simply x_i = g_b(i-1) for every i >= 1.

namespace paircorr {

// Ordered list of exact points in [0, 1). Duplicates are allowed (ingested
// data may contain them); construction rejects out-of-range values.
class PointSet {
 public:
  explicit PointSet(std::vector<Rational> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Rational& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Rational>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Rational> points_;
};

// g_b(n): mirrors the base-b digits of n across the radix point,
// n = sum e_j b^j  ->  sum e_j b^(-j-1). Throws for base < 2.
Rational radical_inverse(std::uint64_t n, std::uint64_t base);

// First n elements [x_1, ..., x_n] of the van der Corput sequence in the
// given base. Throws for n = 0 or base < 2.
PointSet vdc_prefix(std::uint64_t n, std::uint64_t base);

}  // namespace paircorr
