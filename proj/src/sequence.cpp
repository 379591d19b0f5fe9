#include "paircorr/sequence.hpp"

#include <stdexcept>
#include <utility>

namespace paircorr {

PointSet::PointSet(std::vector<Rational> points) : points_(std::move(points)) {
  for (const Rational& p : points_) {
    if (p.sign() < 0 || p.cmp_ui(1, 1) >= 0)
      throw std::domain_error("PointSet: point outside [0, 1): " + p.str());
  }
}

Rational radical_inverse(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::domain_error("radical_inverse: base must be >= 2");
  BigInt num = 0;
  BigInt den = 1;
  for (std::uint64_t v = n; v != 0; v /= base) {
    num = num * base + v % base;
    den *= base;
  }
  return Rational(num, den);
}

PointSet vdc_prefix(std::uint64_t n, std::uint64_t base) {
  if (n == 0) throw std::domain_error("vdc_prefix: N must be >= 1");
  if (base < 2) throw std::domain_error("vdc_prefix: base must be >= 2");
  std::vector<Rational> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) pts.push_back(radical_inverse(i, base));
  return PointSet(std::move(pts));
}

}  // namespace paircorr
