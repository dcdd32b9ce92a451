#ifndef MARKOFF_COEFFS_HPP
#define MARKOFF_COEFFS_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "markoff/bigint.hpp"
#include "markoff/coeff_map.hpp"
#include "markoff/lattice.hpp"
#include "markoff/slope.hpp"

namespace markoff {

using CoeffMapPtr = std::shared_ptr<const CoeffMap>;

// Memo table for F_s keyed by the sector slope. Lookups take a shared
// lock; inserts are insert-if-absent, so two workers racing on the same
// slope both compute it but only the first result is kept.
class CoeffCache {
 public:
  explicit CoeffCache(std::size_t dense_threshold = kDefaultDenseThreshold)
      : dense_threshold_(dense_threshold) {}

  CoeffCache(const CoeffCache&) = delete;
  CoeffCache& operator=(const CoeffCache&) = delete;

  CoeffMapPtr find(const Slope& s) const;
  // Returns the stored value, which is `value` unless another entry won.
  CoeffMapPtr insert(const Slope& s, CoeffMapPtr value);

  std::size_t size() const;
  std::vector<std::pair<Slope, CoeffMapPtr>> snapshot() const;
  void clear();

  std::size_t dense_threshold() const { return dense_threshold_; }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<Slope, CoeffMapPtr> table_;
  std::size_t dense_threshold_;
};

// Process-wide cache used by the overloads without an explicit cache.
CoeffCache& default_cache();

// Indicator of J_s for s in {0, 1, inf, -1}.
CoeffMap base(const Slope& s);
bool is_base_slope(const Slope& s);

// F_s for a sector slope via F_s = F_s0 * F_s1 * 1_Lambda - F_s'.
CoeffMapPtr coeff_map(const Slope& s, CoeffCache& cache);
CoeffMapPtr coeff_map(const Slope& s);

// F_t for any slope, pulled back from the sector through the symmetries.
CoeffMap coeff_map_ext(const Slope& t, CoeffCache& cache);
CoeffMap coeff_map_ext(const Slope& t);

// f_t(1, 1, 1).
BigInt markoff_number(const Slope& t, CoeffCache& cache);
BigInt markoff_number(const Slope& t);

// f_t(x, y, z) in exact rationals; throws std::domain_error on a zero argument.
Rational evaluate(const CoeffMap& f, const Rational& x, const Rational& y, const Rational& z);
Rational evaluate(const Slope& t, const Rational& x, const Rational& y, const Rational& z,
                  CoeffCache& cache);
Rational evaluate(const Slope& t, const Rational& x, const Rational& y, const Rational& z);

struct PascalEdges {
  std::vector<BigInt> left;    // F_s(P_i), i < p
  std::vector<BigInt> right;   // F_s(Q_j), j < q
  std::vector<BigInt> bottom;  // F_s(Q_(q-1) + k (2, -2)), k <= p + q - 1
};

// Throws std::domain_error for 0, inf, and slopes outside the sector.
PascalEdges pascal_edges(const Slope& s, const CoeffMap& f);
PascalEdges pascal_edges(const Slope& s);

std::vector<BigInt> binomial_row(long n);

struct VerifyReport {
  Slope slope;
  bool support_matches = false;
  bool all_positive = false;
  bool corners_are_one = false;
  bool pascal_edges_match = false;
  BigInt markoff_number;

  bool ok() const { return support_matches && all_positive && corners_are_one && pascal_edges_match; }
};

VerifyReport verify_theorem(const Slope& s, const CoeffMap& f);
VerifyReport verify_theorem(const Slope& s, CoeffCache& cache);

}  // namespace markoff

#endif  // MARKOFF_COEFFS_HPP
