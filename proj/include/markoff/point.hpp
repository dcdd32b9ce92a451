#ifndef MARKOFF_POINT_HPP
#define MARKOFF_POINT_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "markoff/slope.hpp"

namespace markoff {

// Exponent offsets (alpha, beta) of the monomial X^(1+a) Y^(1+b) Z^(-1-a-b).
struct LatticePoint {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
  }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) {
    return {a.alpha - b.alpha, a.beta - b.beta};
  }
  friend LatticePoint operator*(std::int64_t k, LatticePoint a) {
    return {k * a.alpha, k * a.beta};
  }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  // Canonical point order: (beta, alpha) lexicographic.
  friend std::strong_ordering operator<=>(const LatticePoint& a,
                                          const LatticePoint& b) {
    if (auto c = a.beta <=> b.beta; c != 0) return c;
    return a.alpha <=> b.alpha;
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& pt);

using PointSet = std::vector<LatticePoint>;

// Sorts into canonical order and removes duplicates.
void canonicalize(PointSet& pts);

// "(a,b) (c,d) ..."
std::string format_points(const PointSet& pts);

LatticePoint apply_transform(Transform t, LatticePoint pt);
// Inverse image under the transform.
LatticePoint preimage(Transform t, LatticePoint pt);
// Determinant of the linear part.
int transform_determinant(Transform t);

}  // namespace markoff

template <>
struct std::hash<markoff::LatticePoint> {
  std::size_t operator()(const markoff::LatticePoint& pt) const noexcept {
    auto a = static_cast<std::uint64_t>(pt.alpha);
    auto b = static_cast<std::uint64_t>(pt.beta);
    return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x7F4A7C15ULL));
  }
};

#endif  // MARKOFF_POINT_HPP
