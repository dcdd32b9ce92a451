#ifndef MARKOFF_ORACLE_HPP
#define MARKOFF_ORACLE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "markoff/bigint.hpp"
#include "markoff/coeff_map.hpp"
#include "markoff/slope.hpp"

namespace markoff {

// Exponent vector (a, b, c) of X^a Y^b Z^c.
using Exponent3 = std::array<std::int64_t, 3>;

// Graded-lex, largest first.
struct GradedLexGreater {
  bool operator()(const Exponent3& x, const Exponent3& y) const {
    const auto dx = x[0] + x[1] + x[2], dy = y[0] + y[1] + y[2];
    if (dx != dy) return dx > dy;
    return x > y;
  }
};

// Laurent polynomial in X, Y, Z with integer coefficients, no zero terms.
class LaurentPoly3 {
 public:
  using Terms = std::map<Exponent3, BigInt, GradedLexGreater>;

  LaurentPoly3() = default;
  static LaurentPoly3 monomial(Exponent3 e, BigInt c = 1);
  static LaurentPoly3 X() { return monomial({1, 0, 0}); }
  static LaurentPoly3 Y() { return monomial({0, 1, 0}); }
  static LaurentPoly3 Z() { return monomial({0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const Exponent3& e) const;

  friend LaurentPoly3 operator+(const LaurentPoly3& a, const LaurentPoly3& b);
  friend LaurentPoly3 operator-(const LaurentPoly3& a, const LaurentPoly3& b);
  friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);
  friend bool operator==(const LaurentPoly3&, const LaurentPoly3&) = default;

  // Exact division by the monomial X^a Y^b Z^c.
  LaurentPoly3 monomial_div(const Exponent3& e) const;

  // "2*X*Y^2*Z^-2 + ..." in term order; "0" for the zero polynomial.
  std::string str() const;

 private:
  void add_term(const Exponent3& e, const BigInt& c);
  Terms terms_;
};

struct OracleResult {
  LaurentPoly3 poly;
  std::size_t path_length = 0;  // number of edge crossings from the central triangle
};

// f_t from (f_0, f_inf, f_-1) = (X, Y, Z) by walking the dual tree and
// applying f = f_a f_b (X^2 + Y^2 + Z^2)/(XYZ) - f_c at each crossing.
// Shares no code with the coefficient-map recursion.
OracleResult f_oracle_walk(const Slope& t);
LaurentPoly3 f_oracle(const Slope& t);

// Monomial (a, b, c) -> point (a - 1, b - 1). Throws std::invalid_argument
// naming the first monomial with a + b + c != 1.
CoeffMap extract_F(const LaurentPoly3& f);

}  // namespace markoff

#endif  // MARKOFF_ORACLE_HPP
