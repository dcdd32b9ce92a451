#include "markoff/point.hpp"

#include <algorithm>

namespace markoff {

std::string LatticePoint::str() const {
  return "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& pt) {
  return os << pt.str();
}

void canonicalize(PointSet& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::string format_points(const PointSet& pts) {
  std::string out;
  for (const auto& pt : pts) {
    if (!out.empty()) out += ' ';
    out += pt.str();
  }
  return out;
}

LatticePoint apply_transform(Transform t, LatticePoint pt) {
  const auto [a, b] = pt;
  switch (t) {
    case Transform::kIdentity: return pt;
    case Transform::kSwap: return {b, a};
    case Transform::kAffineNeg: return {-2 - a - b, b};
    case Transform::kComposite: return {-2 - a - b, a};
  }
  return pt;
}

LatticePoint preimage(Transform t, LatticePoint pt) {
  const auto [a, b] = pt;
  switch (t) {
    case Transform::kIdentity: return pt;
    case Transform::kSwap: return {b, a};
    case Transform::kAffineNeg: return {-2 - a - b, b};
    case Transform::kComposite: return {b, -2 - a - b};
  }
  return pt;
}

int transform_determinant(Transform t) {
  switch (t) {
    case Transform::kIdentity: return 1;
    case Transform::kSwap: return -1;
    case Transform::kAffineNeg: return -1;
    case Transform::kComposite: return 1;
  }
  return 0;
}

}  // namespace markoff
