#include "markoff/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace markoff {

namespace {

bool is_integer_text(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string strip(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  std::string s(t);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string s = strip(text);
  if (!is_integer_text(s)) throw std::invalid_argument("not an integer: '" + s + "'");
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s = strip(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (neg) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !is_integer_text(whole) || !is_integer_text(frac) ||
        frac.front() == '-')
      throw std::invalid_argument("not a number: '" + s + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(BigInt(whole + frac, 10), den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_bigint(s));
}

Rational power(const Rational& x, long e) {
  if (e == 0) return 1;
  if (x == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return 0;
  }
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace markoff
