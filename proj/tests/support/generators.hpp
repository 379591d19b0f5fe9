#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "paircorr/paircount.hpp"
#include "paircorr/rational.hpp"
#include "paircorr/sequence.hpp"

// Shared random generators and threshold grids for the property tests and
// the acceptance suite. All randomness is seeded explicitly so every run
// sees the same cases.

namespace testsupport {

using paircorr::BigInt;
using paircorr::PointSet;
using paircorr::Rational;

inline BigInt random_bigint(std::mt19937_64& rng, int bits) {
  BigInt v = 0;
  for (int produced = 0; produced < bits; produced += 64) {
    v <<= 64;
    v += BigInt(static_cast<unsigned long>(rng()));
  }
  BigInt mask = (BigInt(1) << bits) - 1;
  return v & mask;
}

// Arbitrary signed rational with numerator/denominator up to `bits` bits.
inline Rational random_rational(std::mt19937_64& rng, int bits) {
  BigInt num = random_bigint(rng, bits);
  BigInt den = random_bigint(rng, bits) + 1;
  if (rng() & 1) num = -num;
  return Rational(num, den);
}

// Random point in [0, 1) with denominator at most 2^den_bits.
inline Rational random_unit_rational(std::mt19937_64& rng, int den_bits = 30) {
  const std::uint64_t den = (std::uint64_t{1} << den_bits) - (rng() % 1000);
  const std::uint64_t num = rng() % den;
  return Rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

// Random point set of size n; roughly one point in eight duplicates an
// earlier one (duplicates are legal input and must be counted).
inline PointSet random_point_set(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng() % 8 == 0) {
      pts.push_back(pts[rng() % i]);
    } else {
      pts.push_back(random_unit_rational(rng));
    }
  }
  return PointSet(std::move(pts));
}

// All distinct pairwise circle distances of a point set (at most n(n-1)/2).
inline std::vector<Rational> distinct_distances(const PointSet& pts) {
  std::set<Rational> ds;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      ds.insert(paircorr::circle_distance(pts[i], pts[j]));
  return {ds.begin(), ds.end()};
}

// s values straddling every distance in `distances` (scaled by n): for each
// distance d the grid holds values just below, at, and just above d*n, plus
// 0 and a point past the largest distance.
inline std::vector<Rational> straddling_thresholds(const std::vector<Rational>& distances,
                                                   std::uint64_t n) {
  std::vector<Rational> grid;
  grid.push_back(Rational(0));
  const Rational scale{BigInt(static_cast<unsigned long>(n)), BigInt(1)};
  const Rational nudge{BigInt(1), BigInt(1) << 40};
  for (const Rational& d : distances) {
    const Rational at = d * scale;
    if (at.sign() > 0) grid.push_back(at - nudge);
    grid.push_back(at);
    grid.push_back(at + nudge);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace testsupport
