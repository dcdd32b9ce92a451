#include "markoff/oracle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace markoff {

LaurentPoly3 LaurentPoly3::monomial(Exponent3 e, BigInt c) {
  LaurentPoly3 f;
  if (c != 0) f.terms_.emplace(e, std::move(c));
  return f;
}

BigInt LaurentPoly3::coefficient(const Exponent3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly3::add_term(const Exponent3& e, const BigInt& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly3 operator+(const LaurentPoly3& a, const LaurentPoly3& b) {
  LaurentPoly3 r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly3 operator-(const LaurentPoly3& a, const LaurentPoly3& b) {
  LaurentPoly3 r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
  LaurentPoly3 r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      auto& slot = r.terms_[e];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentPoly3 LaurentPoly3::monomial_div(const Exponent3& d) const {
  LaurentPoly3 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent3{e[0] - d[0], e[1] - d[1], e[2] - d[2]}, c);
  return r;
}

std::string LaurentPoly3::str() const {
  if (terms_.empty()) return "0";
  static const char* kNames[3] = {"X", "Y", "Z"};
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string term;
    BigInt mag = abs(c);
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    bool unit = true;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!term.empty()) term += "*";
      term += kNames[i];
      if (e[i] != 1) term += "^" + std::to_string(e[i]);
      unit = false;
    }
    if (unit) term = decimal(mag);
    else if (mag != 1) term = decimal(mag) + "*" + term;
    out += term;
  }
  return out;
}

namespace {

// Projective point of P^1(Q) as an integer vector (p, q); sign is irrelevant.
struct Vec {
  std::int64_t p, q;
  friend Vec operator+(Vec a, Vec b) { return {a.p + b.p, a.q + b.q}; }
  friend Vec operator-(Vec a, Vec b) { return {a.p - b.p, a.q - b.q}; }
};

__int128 det(Vec a, Vec b) { return static_cast<__int128>(a.p) * b.q - static_cast<__int128>(a.q) * b.p; }
bool same_point(Vec a, Vec b) { return det(a, b) == 0; }
int sign(__int128 v) { return (v > 0) - (v < 0); }

const LaurentPoly3& markoff_kernel_numerator() {
  static const LaurentPoly3 k = LaurentPoly3::monomial({2, 0, 0}) +
                                LaurentPoly3::monomial({0, 2, 0}) +
                                LaurentPoly3::monomial({0, 0, 2});
  return k;
}

}  // namespace

OracleResult f_oracle_walk(const Slope& t) {
  const Vec target{t.p(), t.q()};
  std::array<Vec, 3> v{Vec{1, 0}, Vec{0, 1}, Vec{1, -1}};
  std::array<LaurentPoly3, 3> f{LaurentPoly3::X(), LaurentPoly3::Y(), LaurentPoly3::Z()};
  OracleResult result;

  for (;;) {
    for (int i = 0; i < 3; ++i) {
      if (same_point(v[i], target)) {
        result.poly = f[i];
        return result;
      }
    }
    bool moved = false;
    for (int k = 0; k < 3 && !moved; ++k) {
      const int i = (k + 1) % 3, j = (k + 2) % 3;
      // Across edge (v_i, v_j) the far vertex is whichever of v_i +- v_j is not v_k.
      const bool far_is_sum = !same_point(v[i] + v[j], v[k]);
      const Vec far = far_is_sum ? v[i] + v[j] : v[i] - v[j];
      // target = l v_i + m v_j lies beyond the edge iff l m has the sign of the far vertex.
      const int lm = sign(det(target, v[j])) * sign(det(v[i], target));
      if (lm == (far_is_sum ? 1 : -1)) {
        f[k] = (f[i] * f[j] * markoff_kernel_numerator()).monomial_div({1, 1, 1}) - f[k];
        v[k] = far;
        ++result.path_length;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("f_oracle: tree walk stalled at " + t.str());
  }
}

LaurentPoly3 f_oracle(const Slope& t) { return f_oracle_walk(t).poly; }

CoeffMap extract_F(const LaurentPoly3& f) {
  std::vector<CoeffMap::Entry> raw;
  for (const auto& [e, c] : f.terms()) {
    if (e[0] + e[1] + e[2] != 1) {
      throw std::invalid_argument("extract_F: monomial X^" + std::to_string(e[0]) + " Y^" +
                                  std::to_string(e[1]) + " Z^" + std::to_string(e[2]) +
                                  " has total degree " + std::to_string(e[0] + e[1] + e[2]));
    }
    raw.emplace_back(LatticePoint{e[0] - 1, e[1] - 1}, c);
  }
  return CoeffMap::from_entries(std::move(raw));
}

}  // namespace markoff
