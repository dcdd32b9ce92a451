#include <stdexcept>

#include "doctest.h"
#include "markoff/point.hpp"
#include "markoff/slope.hpp"
#include "oracles.hpp"

using markoff::Slope;

TEST_CASE("reduce normalizes sign and gcd") {
  auto s = Slope::reduce(2, 4);
  CHECK(s.q() == 1);
  CHECK(s.p() == 2);

  CHECK(Slope::reduce(-1, 0) == Slope::infinity());
  CHECK(Slope::reduce(1, 0) == Slope::infinity());
  CHECK(Slope::reduce(7, 0) == Slope::infinity());

  auto neg = Slope::reduce(-3, 6);
  CHECK(neg.q() == -1);
  CHECK(neg.p() == 2);
  CHECK(Slope::reduce(-3, -6) == Slope::reduce(1, 2));
  CHECK(Slope::reduce(3, -6) == neg);

  CHECK_THROWS_AS(Slope::reduce(0, 0), std::invalid_argument);
}

TEST_CASE("parse and print") {
  CHECK(Slope::parse("3") == Slope::integer(3));
  CHECK(Slope::parse("inf") == Slope::infinity());
  CHECK(Slope::parse("6/4") == Slope::reduce(3, 2));
  CHECK(Slope::parse("-1/3").str() == "-1/3");
  CHECK(Slope::parse(" 5/2 ").str() == "5/2");
  CHECK(Slope::infinity().str() == "inf");
  CHECK(Slope::integer(0).str() == "0");
  CHECK_THROWS_AS(Slope::parse("0/0"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Slope::parse("1/"), std::invalid_argument);
}

TEST_CASE("sector membership and ordering") {
  CHECK(Slope::infinity().in_sector());
  CHECK(Slope::integer(0).in_sector());
  CHECK_FALSE(Slope::integer(-1).in_sector());
  CHECK(Slope::parse("1/3") < Slope::parse("1/2"));
  CHECK(Slope::parse("-7") < Slope::parse("-1/2"));
  CHECK(Slope::parse("100") < Slope::infinity());
}

TEST_CASE("parents: worked examples") {
  auto two = markoff::parents(Slope::integer(2));
  CHECK(two.s0 == Slope::infinity());
  CHECK(two.s1 == Slope::integer(1));
  CHECK(two.s_prime == Slope::integer(0));

  auto tf = markoff::parents(Slope::parse("3/5"));
  CHECK(tf.s0 == Slope::parse("1/2"));
  CHECK(tf.s1 == Slope::parse("2/3"));
  CHECK(tf.s_prime == Slope::integer(1));

  auto one = markoff::parents(Slope::integer(1));
  CHECK(one.s0 == Slope::integer(0));
  CHECK(one.s1 == Slope::infinity());
  CHECK(one.s_prime == Slope::integer(-1));
}

TEST_CASE("parents: rejected slopes") {
  CHECK_THROWS_AS(markoff::parents(Slope::integer(0)), std::domain_error);
  CHECK_THROWS_AS(markoff::parents(Slope::infinity()), std::domain_error);
  CHECK_THROWS_AS(markoff::parents(Slope::parse("-2/3")), std::domain_error);
}

TEST_CASE("parents agree with the exhaustive mediant search for p+q <= 40") {
  for (std::int64_t n = 3; n <= 40; ++n) {
    for (std::int64_t p = 1; p < n; ++p) {
      const std::int64_t q = n - p;
      if (std::gcd(p, q) != 1) continue;
      const auto want = oracle::brute_parents(p, q);
      REQUIRE(want.has_value());
      const auto got = markoff::parents(Slope::reduce(q, p));
      CAPTURE(q);
      CAPTURE(p);
      CHECK(got.s0 == Slope::reduce(want->s0.q, want->s0.p));
      CHECK(got.s1 == Slope::reduce(want->s1.q, want->s1.p));
      CHECK(got.s_prime == Slope::reduce(want->sp.q, want->sp.p));
    }
  }
}

TEST_CASE("parent triple invariants and the parents of s1") {
  for (std::int64_t n = 3; n <= 30; ++n) {
    for (std::int64_t p = 0; p <= n; ++p) {
      const std::int64_t q = n - p;
      if (std::gcd(p, q) != 1) continue;
      const Slope s = Slope::reduce(q, p);
      const auto [s0, s1, sp] = markoff::parents(s);
      CAPTURE(s.str());
      CHECK(s0.p() + s1.p() == p);
      CHECK(s0.q() + s1.q() == q);
      CHECK(sp.p() == s1.p() - s0.p());
      CHECK(sp.q() == s1.q() - s0.q());
      CHECK(std::llabs(s0.p() * s1.q() - s1.p() * s0.q()) == 1);
      CHECK(s1.p() >= s0.p());
      CHECK(s1.q() >= s0.q());
      CHECK(sp.in_sector());
      CHECK(sp.p() + sp.q() < p + q);
      if (s1 != Slope::integer(1) && !s1.is_zero() && !s1.is_infinity()) {
        const auto up = markoff::parents(s1);
        const bool same = (up.s0 == s0 && up.s1 == sp) || (up.s0 == sp && up.s1 == s0);
        CHECK(same);
      }
    }
  }
}

TEST_CASE("normalize_to_sector") {
  using markoff::Transform;
  auto half = markoff::normalize_to_sector(Slope::parse("1/2"));
  CHECK(half.target == Slope::parse("1/2"));
  CHECK(half.transform == Transform::kIdentity);

  auto m3 = markoff::normalize_to_sector(Slope::integer(-3));
  CHECK(m3.target == Slope::integer(2));
  CHECK(m3.transform == Transform::kAffineNeg);
  CHECK(markoff::apply_transform(m3.transform, {1, 5}) == markoff::LatticePoint{-8, 5});

  auto third = markoff::normalize_to_sector(Slope::parse("-1/3"));
  CHECK(third.target == Slope::integer(2));
  CHECK(third.transform == Transform::kComposite);
  CHECK(markoff::apply_transform(third.transform, {1, 5}) == markoff::LatticePoint{-8, 1});

  auto m1 = markoff::normalize_to_sector(Slope::integer(-1));
  CHECK(m1.target == Slope::integer(0));
}

TEST_CASE("transforms are unimodular and map parity classes onto parity classes") {
  using markoff::LatticePoint;
  using markoff::Transform;
  for (auto t : {Transform::kIdentity, Transform::kSwap, Transform::kAffineNeg, Transform::kComposite}) {
    CHECK(std::abs(markoff::transform_determinant(t)) == 1);
    for (LatticePoint pt : {LatticePoint{0, 0}, LatticePoint{3, -7}, LatticePoint{-2, 5}})
      CHECK(markoff::preimage(t, markoff::apply_transform(t, pt)) == pt);
  }
  for (std::int64_t q = -12; q < 0; ++q) {
    for (std::int64_t p = 1; p <= 12; ++p) {
      if (std::gcd(-q, p) != 1) continue;
      const Slope t = Slope::reduce(q, p);
      const auto sm = markoff::normalize_to_sector(t);
      CAPTURE(t.str());
      for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
          const LatticePoint x{t.q() + 2 * a, t.p() + 2 * b};
          const LatticePoint y = markoff::apply_transform(sm.transform, x);
          CHECK(((y.alpha - sm.target.q()) & 1) == 0);
          CHECK(((y.beta - sm.target.p()) & 1) == 0);
        }
      }
    }
  }
}

TEST_CASE("continued fractions") {
  CHECK(markoff::continued_fraction(Slope::parse("3/2")) == std::vector<std::int64_t>{1, 2});
  CHECK(markoff::continued_fraction(Slope::parse("1/2")) == std::vector<std::int64_t>{0, 2});
  CHECK(markoff::continued_fraction(Slope::infinity()).empty());
}
