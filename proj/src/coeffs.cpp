#include "markoff/coeffs.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace markoff {

CoeffMapPtr CoeffCache::find(const Slope& s) const {
  std::shared_lock lock(mu_);
  auto it = table_.find(s);
  return it == table_.end() ? nullptr : it->second;
}

CoeffMapPtr CoeffCache::insert(const Slope& s, CoeffMapPtr value) {
  std::unique_lock lock(mu_);
  auto [it, inserted] = table_.try_emplace(s, std::move(value));
  return it->second;
}

std::size_t CoeffCache::size() const {
  std::shared_lock lock(mu_);
  return table_.size();
}

std::vector<std::pair<Slope, CoeffMapPtr>> CoeffCache::snapshot() const {
  std::vector<std::pair<Slope, CoeffMapPtr>> out;
  {
    std::shared_lock lock(mu_);
    out.assign(table_.begin(), table_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void CoeffCache::clear() {
  std::unique_lock lock(mu_);
  table_.clear();
}

CoeffCache& default_cache() {
  static CoeffCache cache;
  return cache;
}

bool is_base_slope(const Slope& s) {
  return s.is_zero() || s.is_infinity() || s == Slope::integer(1) || s == Slope::integer(-1);
}

CoeffMap base(const Slope& s) {
  if (s == Slope::integer(-1)) return CoeffMap::delta({-1, -1});
  if (!is_base_slope(s)) throw std::domain_error("base: " + s.str() + " is not a base slope");
  return CoeffMap::indicator(Domain(s).enumerate());
}

CoeffMapPtr coeff_map(const Slope& s, CoeffCache& cache) {
  if (!s.in_sector())
    throw std::domain_error("coeff_map: " + s.str() + " is outside the sector; use coeff_map_ext");
  if (auto hit = cache.find(s)) return hit;

  CoeffMap value;
  if (is_base_slope(s)) {
    value = base(s);
  } else {
    const auto [s0, s1, sp] = parents(s);
    auto f0 = coeff_map(s0, cache);
    auto f1 = coeff_map(s1, cache);
    auto fp = coeff_map(sp, cache);
    static const CoeffMap kLambda = CoeffMap::indicator(lambda_set(1));
    const auto t = cache.dense_threshold();
    value = convolve(convolve(*f0, *f1, t), kLambda, t) - *fp;
  }
  return cache.insert(s, std::make_shared<const CoeffMap>(std::move(value)));
}

CoeffMapPtr coeff_map(const Slope& s) { return coeff_map(s, default_cache()); }

CoeffMap coeff_map_ext(const Slope& t, CoeffCache& cache) {
  const SectorMap sm = normalize_to_sector(t);
  auto f = coeff_map(sm.target, cache);
  if (sm.transform == Transform::kIdentity) return *f;
  return f->pullback(sm.transform);
}

CoeffMap coeff_map_ext(const Slope& t) { return coeff_map_ext(t, default_cache()); }

BigInt markoff_number(const Slope& t, CoeffCache& cache) {
  // The transforms are bijections of the support, so the sum is the
  // same as for the sector representative.
  return coeff_map(normalize_to_sector(t).target, cache)->sum();
}

BigInt markoff_number(const Slope& t) { return markoff_number(t, default_cache()); }

Rational evaluate(const CoeffMap& f, const Rational& x, const Rational& y, const Rational& z) {
  if (x == 0 || y == 0 || z == 0) throw std::domain_error("evaluate: Laurent pole at a zero argument");
  Rational total = 0;
  for (const auto& [pt, v] : f) {
    const long a = static_cast<long>(pt.alpha), b = static_cast<long>(pt.beta);
    total += Rational(v) * power(x, 1 + a) * power(y, 1 + b) * power(z, -1 - a - b);
  }
  return total;
}

Rational evaluate(const Slope& t, const Rational& x, const Rational& y, const Rational& z,
                  CoeffCache& cache) {
  if (x == 0 || y == 0 || z == 0) throw std::domain_error("evaluate: Laurent pole at a zero argument");
  return evaluate(coeff_map_ext(t, cache), x, y, z);
}

Rational evaluate(const Slope& t, const Rational& x, const Rational& y, const Rational& z) {
  return evaluate(t, x, y, z, default_cache());
}

std::vector<BigInt> binomial_row(long n) {
  std::vector<BigInt> row;
  for (long k = 0; k <= n; ++k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    row.push_back(c);
  }
  return row;
}

PascalEdges pascal_edges(const Slope& s, const CoeffMap& f) {
  if (!s.in_sector() || s.is_zero() || s.is_infinity())
    throw std::domain_error("pascal_edges: undefined for slope " + s.str());
  const Domain d(s);
  PascalEdges e;
  for (std::int64_t i = 0; i < d.p(); ++i) e.left.push_back(f.at(d.P(i)));
  for (std::int64_t j = 0; j < d.q(); ++j) e.right.push_back(f.at(d.Q(j)));
  const LatticePoint v{2, -2};
  for (std::int64_t k = 0; k <= d.p() + d.q() - 1; ++k)
    e.bottom.push_back(f.at(d.Q(d.q() - 1) + k * v));
  return e;
}

PascalEdges pascal_edges(const Slope& s) { return pascal_edges(s, *coeff_map(s)); }

VerifyReport verify_theorem(const Slope& s, const CoeffMap& f) {
  const Domain d(s);
  VerifyReport r;
  r.slope = s;
  r.support_matches = f.support() == d.enumerate();
  r.all_positive = !f.empty() && f.min_value() >= 1;
  r.corners_are_one = true;
  for (const auto& c : d.extremal_points()) r.corners_are_one = r.corners_are_one && f.at(c) == 1;
  if (s.is_zero() || s.is_infinity()) {
    r.pascal_edges_match = true;
  } else {
    const auto e = pascal_edges(s, f);
    r.pascal_edges_match = e.left == binomial_row(d.p() - 1) &&
                           e.right == binomial_row(d.q() - 1) &&
                           e.bottom == binomial_row(d.p() + d.q() - 1);
  }
  r.markoff_number = f.sum();
  return r;
}

VerifyReport verify_theorem(const Slope& s, CoeffCache& cache) {
  return verify_theorem(s, *coeff_map(s, cache));
}

}  // namespace markoff
