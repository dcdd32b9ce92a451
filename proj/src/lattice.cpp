#include "markoff/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace markoff {

namespace {

bool same_parity(std::int64_t a, std::int64_t b) { return ((a - b) & 1) == 0; }

// Twice the signed area of (o, a, b); positive for a left turn.
__int128 cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return static_cast<__int128>(a.alpha - o.alpha) * (b.beta - o.beta) -
         static_cast<__int128>(a.beta - o.beta) * (b.alpha - o.alpha);
}

}  // namespace

// Andrew's monotone chain.
PointSet convex_hull(PointSet pts) {
  std::sort(pts.begin(), pts.end(), [](LatticePoint a, LatticePoint b) {
    return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  PointSet hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Domain::Domain(const Slope& s) : s_(s) {
  if (!s.in_sector())
    throw std::domain_error("domain J_s needs a slope in the sector, got " + s.str());
}

bool Domain::in_parity_class(LatticePoint pt) const {
  return same_parity(pt.alpha, q()) && same_parity(pt.beta, p());
}

bool Domain::contains(LatticePoint pt) const {
  return in_parity_class(pt) && pt.alpha >= -q() && pt.beta >= -p() &&
         pt.alpha + pt.beta <= p() + q() - 2 && phi(pt) >= 0;
}

PointSet Domain::extremal_points() const {
  PointSet out;
  if (p() > 0) {
    out.push_back(P(0));
    out.push_back(P(p() - 1));
  }
  if (q() > 0) {
    out.push_back(Q(0));
    out.push_back(Q(q() - 1));
  }
  canonicalize(out);
  return out;
}

PointSet Domain::enumerate() const {
  PointSet out;
  const std::int64_t top = p() + q() - 2;
  for (std::int64_t b = -p(); b <= top + q(); b += 2) {
    for (std::int64_t a = -q(); a + b <= top; a += 2) {
      if (phi({a, b}) >= 0) out.push_back({a, b});
    }
  }
  return out;
}

PointSet Domain::generators(std::int64_t n) const {
  PointSet out;
  for (std::int64_t i = 0; i < p() + n; ++i) out.push_back(P(i));
  for (std::int64_t j = 0; j < q() + n; ++j) out.push_back(Q(j));
  canonicalize(out);
  return out;
}

PointSet hull_points(const PointSet& points, LatticePoint parity_base) {
  if (points.empty()) return {};
  for (const auto& pt : points) {
    if (!same_parity(pt.alpha, parity_base.alpha) || !same_parity(pt.beta, parity_base.beta))
      throw std::invalid_argument("hull_points: " + pt.str() + " is outside the parity class");
  }
  auto [amin, amax] = std::minmax_element(points.begin(), points.end(),
      [](LatticePoint x, LatticePoint y) { return x.alpha < y.alpha; });
  auto [bmin, bmax] = std::minmax_element(points.begin(), points.end(),
      [](LatticePoint x, LatticePoint y) { return x.beta < y.beta; });
  const PointSet hull = convex_hull(points);

  auto inside = [&hull](LatticePoint pt) {
    if (hull.size() == 1) return pt == hull[0];
    if (hull.size() == 2) {
      const auto& a = hull[0];
      const auto& b = hull[1];
      return cross(a, b, pt) == 0 &&
             std::min(a.alpha, b.alpha) <= pt.alpha && pt.alpha <= std::max(a.alpha, b.alpha) &&
             std::min(a.beta, b.beta) <= pt.beta && pt.beta <= std::max(a.beta, b.beta);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (cross(hull[i], hull[(i + 1) % hull.size()], pt) < 0) return false;
    }
    return true;
  };

  PointSet out;
  for (std::int64_t b = bmin->beta; b <= bmax->beta; b += 2) {
    for (std::int64_t a = amin->alpha; a <= amax->alpha; a += 2) {
      if (inside({a, b})) out.push_back({a, b});
    }
  }
  canonicalize(out);
  return out;
}

PointSet lambda_set(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("lambda_set: negative multiple");
  PointSet out;
  for (std::int64_t i = 0; i <= n; ++i)
    for (std::int64_t j = 0; i + j <= n; ++j) out.push_back({2 * i, 2 * j});
  canonicalize(out);
  return out;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  PointSet out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x + y);
  canonicalize(out);
  return out;
}

SplitResult split_x(const Slope& s) {
  if (!s.in_sector() || s.is_zero() || s.is_infinity() || s == Slope::integer(1))
    throw std::domain_error("split_x: no exceptional point for slope " + s.str());
  const auto [s0, s1, sp] = parents(s);
  const Domain d0(s0), d1(s1), dp(sp);
  const std::int64_t det = s0.p() * s1.q() - s1.p() * s0.q();
  SplitResult r;
  if (det == -1) {
    r = {dp.P(0), d0.Q(0), d1.P(0), 1};
  } else {
    r = {dp.Q(0), d0.P(0), d1.Q(0), 2};
  }
  return r;
}

}  // namespace markoff
