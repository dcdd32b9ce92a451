#ifndef MARKOFF_COEFF_MAP_HPP
#define MARKOFF_COEFF_MAP_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "markoff/bigint.hpp"
#include "markoff/point.hpp"

namespace markoff {

// Finitely supported function Z^2 -> Z. Entries are kept sorted in
// (beta, alpha) order with no stored zeros, so equality of maps is
// equality of entry lists.
class CoeffMap {
 public:
  using Entry = std::pair<LatticePoint, BigInt>;

  CoeffMap() = default;
  CoeffMap(std::initializer_list<std::pair<LatticePoint, long>> entries);
  // Accepts entries in any order; duplicates are summed and zeros dropped.
  static CoeffMap from_entries(std::vector<Entry> entries);
  static CoeffMap indicator(const PointSet& pts);
  static CoeffMap delta(LatticePoint pt) { return indicator({pt}); }

  BigInt at(LatticePoint pt) const;
  bool contains(LatticePoint pt) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  PointSet support() const;
  BigInt sum() const;
  BigInt min_value() const;  // 0 for the empty map

  // Pullback through an affine transform: result(x) = this(T(x)).
  CoeffMap pullback(Transform t) const;
  // result(x) = this(x - shift).
  CoeffMap translated(LatticePoint shift) const;

  friend CoeffMap operator+(const CoeffMap& a, const CoeffMap& b);
  friend CoeffMap operator-(const CoeffMap& a, const CoeffMap& b);
  friend bool operator==(const CoeffMap& a, const CoeffMap& b) { return a.entries_ == b.entries_; }

  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Entry> entries_;
};

// Switches from hashed accumulation to a dense block buffer when both
// supports exceed this many points.
inline constexpr std::size_t kDefaultDenseThreshold = 4096;

// (f * g)(u) = sum over x + y = u of f(x) g(y).
CoeffMap convolve(const CoeffMap& f, const CoeffMap& g,
                  std::size_t dense_threshold = kDefaultDenseThreshold);

}  // namespace markoff

#endif  // MARKOFF_COEFF_MAP_HPP
