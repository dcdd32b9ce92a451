#ifndef MARKOFF_SLOPE_HPP
#define MARKOFF_SLOPE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace markoff {

// A point of P^1(Q), stored as the reduced fraction q/p with p >= 0.
// Infinity is q = 1, p = 0. The sign of a finite slope lives on q.
class Slope {
 public:
  Slope() : q_(0), p_(1) {}

  // Reduces (q, p) to lowest terms. Throws std::invalid_argument on (0, 0).
  static Slope reduce(std::int64_t q, std::int64_t p);
  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(std::int64_t n) { return Slope(n, 1); }

  // Accepts "q/p", a plain integer, or "inf".
  static Slope parse(std::string_view text);

  std::int64_t q() const { return q_; }
  std::int64_t p() const { return p_; }

  bool is_infinity() const { return p_ == 0; }
  bool is_zero() const { return q_ == 0; }
  // Membership in the nonnegative sector Q>=0 u {inf}.
  bool in_sector() const { return q_ >= 0; }

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  // Orders by value on the extended real line, infinity last.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  Slope(std::int64_t q, std::int64_t p) : q_(q), p_(p) {}

  std::int64_t q_;
  std::int64_t p_;
};

// Farey configuration (s, s', s0, s1): s0 and s1 are the parents of s,
// and the parents of s1 are s0 and s'.
struct ParentTriple {
  Slope s0;
  Slope s1;
  Slope s_prime;
};

// Throws std::domain_error for slopes outside the sector and for 0 and inf.
// For s = 1 the triple is (0, inf, -1).
ParentTriple parents(const Slope& s);

// Affine bijections of Z^2 acting on the arguments of a coefficient map.
enum class Transform { kIdentity, kSwap, kAffineNeg, kComposite };

struct SectorMap {
  Slope target;
  Transform transform = Transform::kIdentity;
};

// Finds s in the sector and T with F_t(a, b) = F_s(T(a, b)).
SectorMap normalize_to_sector(const Slope& t);

const char* transform_name(Transform t);

// Continued fraction partial quotients of a sector slope q/p; inf -> {}.
std::vector<std::int64_t> continued_fraction(const Slope& s);

}  // namespace markoff

template <>
struct std::hash<markoff::Slope> {
  std::size_t operator()(const markoff::Slope& s) const noexcept {
    return std::hash<std::int64_t>{}(s.q() * 1000003 + s.p());
  }
};

#endif  // MARKOFF_SLOPE_HPP
