#ifndef MARKOFF_BIGINT_HPP
#define MARKOFF_BIGINT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace markoff {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string decimal(const BigInt& v) { return v.get_str(10); }
// "n" or "n/d" in lowest terms.
inline std::string decimal(const Rational& v) { return v.get_str(10); }

// Parses an integer, "n/d", or a finite decimal like "-1.25".
// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// x^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational power(const Rational& x, long e);

}  // namespace markoff

#endif  // MARKOFF_BIGINT_HPP
