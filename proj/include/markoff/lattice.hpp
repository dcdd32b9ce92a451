#ifndef MARKOFF_LATTICE_HPP
#define MARKOFF_LATTICE_HPP

#include <cstdint>

#include "markoff/point.hpp"
#include "markoff/slope.hpp"

namespace markoff {

// The lattice polygon J_s for a sector slope s = q/p:
//   alpha = q, beta = p (mod 2)
//   alpha >= -q, beta >= -p, alpha + beta <= p + q - 2, p*alpha + q*beta >= 0
class Domain {
 public:
  // Throws std::domain_error when s is not in the sector.
  explicit Domain(const Slope& s);

  const Slope& slope() const { return s_; }
  std::int64_t p() const { return s_.p(); }
  std::int64_t q() const { return s_.q(); }

  bool contains(LatticePoint pt) const;
  // The linear form p*alpha + q*beta; even on the parity class.
  std::int64_t phi(LatticePoint pt) const { return p() * pt.alpha + q() * pt.beta; }
  bool in_parity_class(LatticePoint pt) const;
  LatticePoint parity_base() const { return {q(), p()}; }

  LatticePoint P(std::int64_t i) const { return {q() + 2 * i, -p()}; }
  LatticePoint Q(std::int64_t j) const { return {-q(), p() + 2 * j}; }

  // {P_0, P_(p-1), Q_0, Q_(q-1)} without repeats, in canonical order.
  PointSet extremal_points() const;
  // Every point of J_s in canonical (beta, alpha) order.
  PointSet enumerate() const;
  // The generating family {P_i : i < p + n} u {Q_j : j < q + n}.
  PointSet generators(std::int64_t n = 0) const;

 private:
  Slope s_;
};

// Lattice points of parity_base + 2Z^2 lying in the convex hull of `points`.
// Exact integer orientation tests; empty input gives empty output.
PointSet hull_points(const PointSet& points, LatticePoint parity_base);

// Vertices of the convex hull in counter-clockwise order, collinear points dropped.
PointSet convex_hull(PointSet pts);

// n*Lambda = {(2i, 2j) : i, j >= 0, i + j <= n}.
PointSet lambda_set(std::int64_t n);

PointSet minkowski_sum(const PointSet& a, const PointSet& b);

struct SplitResult {
  LatticePoint xs;
  LatticePoint y0;
  LatticePoint y1;
  int case_tag = 1;
};

// The exceptional point x_s = y0 + y1 of J_{s'} \ J_s.
// Throws std::domain_error for s in {0, 1, inf} or outside the sector.
SplitResult split_x(const Slope& s);

}  // namespace markoff

#endif  // MARKOFF_LATTICE_HPP
