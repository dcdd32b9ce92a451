// Test-only ground truth. Nothing here calls into the code paths it checks.
#ifndef MARKOFF_TESTS_ORACLES_HPP
#define MARKOFF_TESTS_ORACLES_HPP

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

struct PQ {
  std::int64_t p, q;
  bool operator<(const PQ& o) const { return p != o.p ? p < o.p : q < o.q; }
  bool operator==(const PQ& o) const { return p == o.p && q == o.q; }
};

struct Parents {
  PQ s0, s1, sp;
};

// Exhaustive mediant search: (p0,q0) + (p1,q1) = (p,q), |p0 q1 - p1 q0| = 1,
// s1 >= s0 componentwise. Returns nullopt for s = 1 (no ordered pair).
inline std::optional<Parents> brute_parents(std::int64_t p, std::int64_t q) {
  std::vector<Parents> found;
  for (std::int64_t p0 = 0; p0 <= p; ++p0) {
    for (std::int64_t q0 = 0; q0 <= q; ++q0) {
      const std::int64_t p1 = p - p0, q1 = q - q0;
      if (p0 + q0 == 0 || p1 + q1 == 0) continue;
      if (std::llabs(p0 * q1 - p1 * q0) != 1) continue;
      if (p1 >= p0 && q1 >= q0) found.push_back({{p0, q0}, {p1, q1}, {p1 - p0, q1 - q0}});
    }
  }
  if (found.size() > 1) throw std::logic_error("brute_parents: ambiguous decomposition");
  if (found.empty()) return std::nullopt;
  return found.front();
}

// m_s = 3 m_s0 m_s1 - m_s' with m_0 = m_inf = m_-1 = 1; sector slopes only.
inline mpz_class scalar_markoff(std::int64_t p, std::int64_t q) {
  static std::map<PQ, mpz_class> memo;
  if (p == 0 || q == 0) return 1;
  if (p == 1 && q == 1) return 3 * 1 * 1 - 1;
  if (auto it = memo.find({p, q}); it != memo.end()) return it->second;
  const auto par = brute_parents(p, q);
  if (!par) throw std::logic_error("scalar_markoff: no parents");
  mpz_class m = 3 * scalar_markoff(par->s0.p, par->s0.q) * scalar_markoff(par->s1.p, par->s1.q) -
                scalar_markoff(par->sp.p, par->sp.q);
  memo[{p, q}] = m;
  return m;
}

// Points (alpha, beta) satisfying the four inequalities and two congruences
// of the domain definition, scanned over a generous box.
inline std::set<std::pair<std::int64_t, std::int64_t>> brute_domain(std::int64_t p, std::int64_t q) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t r = 3 * (p + q) + 4;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = -r; b <= r; ++b) {
      if (((a - q) % 2 + 2) % 2 != 0 || ((b - p) % 2 + 2) % 2 != 0) continue;
      if (a < -q || b < -p || a + b > p + q - 2 || p * a + q * b < 0) continue;
      out.insert({a, b});
    }
  }
  return out;
}

// Row n of Pascal's triangle by repeated addition.
inline std::vector<mpz_class> pascal_row(std::int64_t n) {
  std::vector<mpz_class> row{1};
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

using Sparse = std::map<std::pair<std::int64_t, std::int64_t>, mpz_class>;

// Quadratic-time convolution on ordered maps.
inline Sparse naive_convolve(const Sparse& f, const Sparse& g) {
  Sparse out;
  for (const auto& [x, fx] : f)
    for (const auto& [y, gy] : g) out[{x.first + y.first, x.second + y.second}] += fx * gy;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace oracle

#endif  // MARKOFF_TESTS_ORACLES_HPP
