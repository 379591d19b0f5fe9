#include <doctest.h>

#include <algorithm>
#include <set>

#include "paircorr/rational.hpp"
#include "paircorr/sequence.hpp"

using paircorr::PointSet;
using paircorr::Rational;
using paircorr::radical_inverse;
using paircorr::vdc_prefix;

TEST_CASE("radical_inverse: examples") {
  CHECK(radical_inverse(0, 2) == Rational(0));
  CHECK(radical_inverse(6, 2) == Rational(3, 8));   // 6 = 110_2 mirrored
  CHECK(radical_inverse(5, 3) == Rational(7, 9));   // 5 = 12_3 mirrored
}

TEST_CASE("radical_inverse: domain") {
  CHECK_THROWS_AS(radical_inverse(3, 1), std::domain_error);
  CHECK_THROWS_AS(radical_inverse(3, 0), std::domain_error);
}

TEST_CASE("vdc_prefix: examples") {
  const PointSet one = vdc_prefix(1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Rational(0));

  const PointSet eight = vdc_prefix(8, 2);
  const Rational expected[] = {Rational(0),    Rational(1, 2), Rational(1, 4), Rational(3, 4),
                               Rational(1, 8), Rational(5, 8), Rational(3, 8), Rational(7, 8)};
  REQUIRE(eight.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(eight[i] == expected[i]);

  const PointSet base3 = vdc_prefix(4, 3);
  const Rational expected3[] = {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1, 9)};
  REQUIRE(base3.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(base3[i] == expected3[i]);
}

TEST_CASE("vdc_prefix: domain") {
  CHECK_THROWS_AS(vdc_prefix(0, 2), std::domain_error);
  CHECK_THROWS_AS(vdc_prefix(4, 1), std::domain_error);
}

TEST_CASE("prefix property") {
  for (std::uint64_t base : {2, 3, 5}) {
    const PointSet big = vdc_prefix(257, base);
    for (std::uint64_t n : {1, 2, 31, 256}) {
      const PointSet small = vdc_prefix(n, base);
      for (std::uint64_t i = 0; i < n; ++i) CHECK(small[i] == big[i]);
    }
  }
}

TEST_CASE("distinctness of the first 4096 points") {
  for (std::uint64_t base : {2, 3}) {
    const PointSet pts = vdc_prefix(4096, base);
    std::set<Rational> seen(pts.begin(), pts.end());
    CHECK(seen.size() == pts.size());
  }
}

TEST_CASE("base 2: first 2^m points are exactly {k/2^m}") {
  for (int m = 0; m <= 10; ++m) {
    const std::uint64_t block = std::uint64_t{1} << m;
    const PointSet pts = vdc_prefix(block, 2);
    std::set<Rational> seen(pts.begin(), pts.end());
    REQUIRE(seen.size() == block);
    for (std::uint64_t k = 0; k < block; ++k)
      CHECK(seen.count(Rational(paircorr::BigInt(static_cast<unsigned long>(k)),
                                paircorr::BigInt(static_cast<unsigned long>(block)))) == 1);
  }
}

TEST_CASE("base 2: points after 2^m are odd multiples of 2^-(m+1)") {
  for (int m = 0; m <= 9; ++m) {
    const std::uint64_t block = std::uint64_t{1} << m;
    const PointSet pts = vdc_prefix(2 * block, 2);
    for (std::uint64_t j = block; j < 2 * block; ++j) {
      const Rational scaled = pts[j] * Rational(paircorr::BigInt(2 * block));
      CHECK(scaled.is_integer());
      CHECK(mpz_odd_p(scaled.numerator().get_mpz_t()));
    }
  }
}

TEST_CASE("base 2: second block is the first block translated by 2^-(m+1)") {
  // x_{2^m + j} = x_j (+) 2^-(m+1) mod 1, for 1 <= j <= 2^m
  for (int m = 0; m <= 11; ++m) {
    const std::uint64_t block = std::uint64_t{1} << m;
    const PointSet pts = vdc_prefix(2 * block, 2);
    const Rational shift(paircorr::BigInt(1), paircorr::BigInt(2 * block));
    for (std::uint64_t j = 1; j <= block; ++j)
      CHECK(pts[block + j - 1] == (pts[j - 1] + shift).mod1());
  }
}

TEST_CASE("PointSet rejects out-of-range points") {
  CHECK_THROWS_AS(PointSet({Rational(1)}), std::domain_error);
  CHECK_THROWS_AS(PointSet({Rational(-1, 2)}), std::domain_error);
  CHECK_NOTHROW(PointSet({Rational(0), Rational(0)}));  // duplicates are fine
}
