#include "markoff/slope.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <system_error>
#include <tuple>
#include <utility>

namespace markoff {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return v;
}

// Inverse of a modulo m, in [0, m). Requires gcd(a, m) = 1 and m >= 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = a % m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - k * t1};
  }
  t0 %= m;
  return t0 < 0 ? t0 + m : t0;
}

}  // namespace

Slope Slope::reduce(std::int64_t q, std::int64_t p) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
  if (p == 0) return infinity();
  std::int64_t g = std::gcd(q, p);
  q /= g;
  p /= g;
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return Slope(q, p);
}

Slope Slope::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "infinity" || text == "oo" || text == "1/0" ||
      text == "-1/0")
    return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(parse_int(text));
  std::int64_t q = parse_int(text.substr(0, slash));
  std::int64_t p = parse_int(text.substr(slash + 1));
  return reduce(q, p);
}

std::string Slope::str() const {
  if (is_infinity()) return "inf";
  if (p_ == 1) return std::to_string(q_);
  return std::to_string(q_) + "/" + std::to_string(p_);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinity() || b.is_infinity())
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  __int128 lhs = static_cast<__int128>(a.q_) * b.p_;
  __int128 rhs = static_cast<__int128>(b.q_) * a.p_;
  return lhs <=> rhs;
}

ParentTriple parents(const Slope& s) {
  if (!s.in_sector() || s.is_zero() || s.is_infinity())
    throw std::domain_error("slope " + s.str() + " has no parents in the sector");
  const std::int64_t q = s.q(), p = s.p();
  if (p == 1 && q == 1)
    return {Slope::integer(0), Slope::infinity(), Slope::integer(-1)};

  // Left Farey neighbour (pl, ql): q*pl - p*ql = 1 with 1 <= pl <= p.
  std::int64_t pl = p == 1 ? 1 : inverse_mod(q % p, p);
  if (pl == 0) pl = p;
  std::int64_t ql = (q * pl - 1) / p;
  std::int64_t pr = p - pl, qr = q - ql;

  // s1 is the parent obtained later in the Stern-Brocot descent.
  bool left_is_s1 = pl + ql > pr + qr;
  std::int64_t p0 = left_is_s1 ? pr : pl, q0 = left_is_s1 ? qr : ql;
  std::int64_t p1 = left_is_s1 ? pl : pr, q1 = left_is_s1 ? ql : qr;
  return {Slope::reduce(q0, p0), Slope::reduce(q1, p1),
          Slope::reduce(q1 - q0, p1 - p0)};
}

SectorMap normalize_to_sector(const Slope& t) {
  if (t.in_sector()) return {t, Transform::kIdentity};
  const std::int64_t q = t.q(), p = t.p();
  if (-q >= p) return {Slope::reduce(-q - p, p), Transform::kAffineNeg};
  return {Slope::reduce(q + p, -q), Transform::kComposite};
}

const char* transform_name(Transform t) {
  switch (t) {
    case Transform::kIdentity: return "identity";
    case Transform::kSwap: return "swap";
    case Transform::kAffineNeg: return "affine_neg";
    case Transform::kComposite: return "composite";
  }
  return "?";
}

std::vector<std::int64_t> continued_fraction(const Slope& s) {
  if (!s.in_sector())
    throw std::domain_error("continued_fraction: negative slope " + s.str());
  std::vector<std::int64_t> out;
  std::int64_t a = s.q(), b = s.p();
  while (b != 0) {
    out.push_back(a / b);
    std::tie(a, b) = std::pair{b, a % b};
  }
  return out;
}

}  // namespace markoff
