#include "markoff/checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "markoff/oracle.hpp"

namespace markoff {

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + decimal(xs[i]);
  return out + "]";
}

CheckFailure fail(std::string check, const Slope& s, std::optional<LatticePoint> pt,
                  std::string expected, std::string got) {
  return {std::move(check), s, pt, std::move(expected), std::move(got)};
}

// First point where two maps disagree, in canonical order.
std::optional<LatticePoint> first_difference(const CoeffMap& a, const CoeffMap& b) {
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) return i->first;
    if (i == a.end() || j->first < i->first) return j->first;
    if (i->second != j->second) return i->first;
    ++i;
    ++j;
  }
  return std::nullopt;
}

}  // namespace

std::string CheckFailure::str() const {
  std::string out = check + " failed at slope " + slope.str();
  if (point) out += ", point " + point->str();
  return out + ": expected " + expected + ", got " + got;
}

std::optional<CheckFailure> check_theorem(const Slope& s, CoeffCache& cache) {
  const auto f = coeff_map(s, cache);
  const Domain d(s);
  const auto want = CoeffMap::indicator(d.enumerate());
  for (const auto& pt : d.enumerate()) {
    if (f->at(pt) < 1) return fail("positivity", s, pt, ">= 1", decimal(f->at(pt)));
  }
  for (const auto& [pt, v] : *f) {
    if (!d.contains(pt)) return fail("support", s, pt, "0 outside J_s", decimal(v));
  }
  for (const auto& c : d.extremal_points()) {
    if (f->at(c) != 1) return fail("corner", s, c, "1", decimal(f->at(c)));
  }
  if (!s.is_zero() && !s.is_infinity()) {
    const auto e = pascal_edges(s, *f);
    const auto l = binomial_row(d.p() - 1), r = binomial_row(d.q() - 1),
               b = binomial_row(d.p() + d.q() - 1);
    if (e.left != l) return fail("pascal-left", s, std::nullopt, join(l), join(e.left));
    if (e.right != r) return fail("pascal-right", s, std::nullopt, join(r), join(e.right));
    if (e.bottom != b) return fail("pascal-bottom", s, std::nullopt, join(b), join(e.bottom));
  }
  return std::nullopt;
}

std::optional<CheckFailure> check_minkowski_identity(const Slope& s) {
  if (s.is_zero() || s.is_infinity() || s == Slope::integer(1)) return std::nullopt;
  const auto [s0, s1, sp] = parents(s);
  const Domain d(s), d0(s0), d1(s1), dp(sp);
  const SplitResult split = split_x(s);

  if (split.y0 + split.y1 != split.xs)
    return fail("split", s, split.xs, "y0 + y1", (split.y0 + split.y1).str());
  if (d.phi(split.xs) != -2)
    return fail("phi(x_s)", s, split.xs, "-2", std::to_string(d.phi(split.xs)));

  PointSet outside;
  for (const auto& pt : dp.enumerate())
    if (!d.contains(pt)) outside.push_back(pt);
  if (outside != PointSet{split.xs})
    return fail("J_s' minus J_s", s, std::nullopt, split.xs.str(), format_points(outside));

  PointSet want = d.enumerate();
  if (std::binary_search(want.begin(), want.end(), split.xs))
    return fail("x_s not in J_s", s, split.xs, "absent", "present");
  want.push_back(split.xs);
  canonicalize(want);
  const PointSet got = minkowski_sum(minkowski_sum(d0.enumerate(), d1.enumerate()), lambda_set(1));
  if (got != want) {
    PointSet diff;
    std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                  std::back_inserter(diff));
    return fail("minkowski", s, diff.front(), "J_s u {x_s}", "mismatch " + format_points(diff));
  }
  return std::nullopt;
}

std::optional<CheckFailure> check_shift_bounds(const Slope& s, CoeffCache& cache) {
  if (s.is_zero() || s.is_infinity()) return std::nullopt;
  const auto [s0, s1, sp] = parents(s);
  const Domain d(s), d0(s0), d1(s1);
  const auto f = coeff_map(s, cache), f0 = coeff_map(s0, cache), f1 = coeff_map(s1, cache);
  for (const auto& x : d.enumerate()) {
    const BigInt bounds[4] = {f1->at(x - d0.P(0)), f0->at(x - d1.P(0)), f1->at(x - d0.Q(0)),
                              f0->at(x - d1.Q(0))};
    const BigInt& lower = *std::max_element(std::begin(bounds), std::end(bounds));
    const BigInt v = f->at(x);
    if (v < lower) return fail("shift-bound", s, x, ">= " + decimal(lower), decimal(v));
  }
  return std::nullopt;
}

std::optional<CheckFailure> check_oracle(const Slope& t, CoeffCache& cache) {
  const LaurentPoly3 poly = f_oracle(t);
  for (const auto& [e, c] : poly.terms()) {
    if (e[0] + e[1] + e[2] != 1)
      return fail("oracle-degree", t, LatticePoint{e[0] - 1, e[1] - 1}, "degree 1",
                  "degree " + std::to_string(e[0] + e[1] + e[2]));
  }
  const CoeffMap want = extract_F(poly);
  const CoeffMap got = coeff_map_ext(t, cache);
  if (auto pt = first_difference(want, got))
    return fail("oracle", t, *pt, decimal(want.at(*pt)), decimal(got.at(*pt)));
  return std::nullopt;
}

}  // namespace markoff
