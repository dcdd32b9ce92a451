#ifndef MARKOFF_CHECKS_HPP
#define MARKOFF_CHECKS_HPP

#include <optional>
#include <string>

#include "markoff/coeffs.hpp"

namespace markoff {

// First counterexample found by one of the checks below.
struct CheckFailure {
  std::string check;
  Slope slope;
  std::optional<LatticePoint> point;
  std::string expected;
  std::string got;

  std::string str() const;
};

// Support equals J_s, values >= 1, corners equal 1, edges are Pascal rows.
std::optional<CheckFailure> check_theorem(const Slope& s, CoeffCache& cache);

// J_s0 + J_s1 + Lambda = J_s u {x_s}, J_s' \ J_s = {x_s}, phi_s(x_s) = -2.
// Vacuous for s in {0, 1, inf}.
std::optional<CheckFailure> check_minkowski_identity(const Slope& s);

// F_s >= each of F_s1(x - P^s0_0), F_s0(x - P^s1_0), F_s1(x - Q^s0_0),
// F_s0(x - Q^s1_0) on J_s. Vacuous for s in {0, inf}.
std::optional<CheckFailure> check_shift_bounds(const Slope& s, CoeffCache& cache);

// extract_F(f_oracle(t)) = coeff_map_ext(t), and every oracle monomial has degree 1.
std::optional<CheckFailure> check_oracle(const Slope& t, CoeffCache& cache);

}  // namespace markoff

#endif  // MARKOFF_CHECKS_HPP
