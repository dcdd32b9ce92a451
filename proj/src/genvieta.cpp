#include "markoff/genvieta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iostream>
#include <numeric>
#include <type_traits>
#include <unordered_map>

namespace markoff::gen {

namespace {

bool graded_lex_greater(const Monomial& x, const Monomial& y) {
  const long dx = std::accumulate(x.begin(), x.end(), 0L);
  const long dy = std::accumulate(y.begin(), y.end(), 0L);
  if (dx != dy) return dx > dy;
  return x > y;
}

void addmul(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
void addmul(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
void submul(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
void submul(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }

long degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0L); }

std::size_t bit_length(const BigInt& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}
std::size_t bit_length(const Rational& v) {
  return std::max(bit_length(BigInt(v.get_num())), bit_length(BigInt(v.get_den())));
}

void check_arity(int n) {
  if (n < 2 || n > kMaxVariables)
    throw std::invalid_argument("number of variables must be in [2, " +
                                std::to_string(kMaxVariables) + "], got " + std::to_string(n));
}

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

int parse_index(std::string_view t) {
  t = trim(t);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("not an index: '" + std::string(t) + "'");
  return v;
}

}  // namespace

namespace {

std::size_t hash_exponents(const std::int32_t* m, std::size_t w) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < w; ++i) {
    h ^= static_cast<std::uint32_t>(m[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// Open-addressing table from monomials to coefficients. Exponent vectors
// live back to back in one buffer, so inserting allocates nothing per key.
template <class C>
class TermAccumulator {
 public:
  TermAccumulator(std::size_t width, std::size_t expected) : w_(width) {
    std::size_t cap = 64;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
    flat_.reserve(expected * w_);
    coeffs_.reserve(expected);
  }

  C& at(const std::int32_t* m) {
    if (2 * (coeffs_.size() + 1) > slots_.size()) grow();
    for (std::size_t i = hash_exponents(m, w_) & (slots_.size() - 1);; i = (i + 1) & (slots_.size() - 1)) {
      const auto s = slots_[i];
      if (s == kEmpty) {
        slots_[i] = coeffs_.size();
        flat_.insert(flat_.end(), m, m + w_);
        coeffs_.emplace_back(0);
        return coeffs_.back();
      }
      if (std::equal(m, m + w_, flat_.data() + s * w_)) return coeffs_[s];
    }
  }

  std::size_t size() const { return coeffs_.size(); }

  std::vector<typename GenPolyT<C>::Term> take_terms() {
    std::vector<typename GenPolyT<C>::Term> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0)
        out.emplace_back(Monomial(flat_.begin() + static_cast<std::ptrdiff_t>(i * w_),
                                  flat_.begin() + static_cast<std::ptrdiff_t>((i + 1) * w_)),
                         std::move(coeffs_[i]));
    return out;
  }

 private:
  static constexpr std::size_t kEmpty = ~std::size_t{0};

  void grow() {
    std::vector<std::size_t> next(slots_.size() * 2, kEmpty);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
      std::size_t i = hash_exponents(flat_.data() + s * w_, w_) & (next.size() - 1);
      while (next[i] != kEmpty) i = (i + 1) & (next.size() - 1);
      next[i] = s;
    }
    slots_ = std::move(next);
  }

  std::size_t w_;
  std::vector<std::size_t> slots_;
  std::vector<std::int32_t> flat_;
  std::vector<C> coeffs_;
};

// acc += f * g, or acc -= f * g.
template <class C>
void add_product(TermAccumulator<C>& acc, const GenPolyT<C>& f, const GenPolyT<C>& g, bool negate,
                 std::size_t term_cap) {
  const std::size_t w = f.width();
  Monomial m(w);
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      for (std::size_t i = 0; i < w; ++i) m[i] = ma[i] + mb[i];
      if (negate) submul(acc.at(m.data()), ca, cb);
      else addmul(acc.at(m.data()), ca, cb);
    }
    if (acc.size() > 2 * term_cap)
      throw ResourceError("polynomial product exceeded the term cap of " + std::to_string(term_cap));
  }
}

template <class C>
GenPolyT<C> finish(int n, TermAccumulator<C>& acc, std::size_t term_cap) {
  auto raw = acc.take_terms();
  if (raw.size() > term_cap)
    throw ResourceError("polynomial with " + std::to_string(raw.size()) +
                        " terms exceeds the term cap of " + std::to_string(term_cap));
  return GenPolyT<C>::from_terms(n, std::move(raw));
}

}  // namespace

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  return hash_exponents(m.data(), m.size());
}

std::string subset_name(SubsetMask mask) {
  std::string out = "{";
  for (int i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1) {
      if (out.size() > 1) out += ",";
      out += std::to_string(i + 1);
    }
  }
  return out + "}";
}

SubsetMask parse_subset(std::string_view text, int n) {
  text = trim(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}')
    text = text.substr(1, text.size() - 2);
  SubsetMask mask = 0;
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    int i = parse_index(text.substr(0, comma));
    if (i < 1 || i > n)
      throw std::invalid_argument("subset index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    mask |= SubsetMask{1} << (i - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (mask == full_mask(n))
    throw std::invalid_argument("A_I is only defined for proper subsets I; the full set has no coefficient");
  return mask;
}

// ---------------------------------------------------------------------------
// GenPolyT

template <class C>
GenPolyT<C> GenPolyT<C>::constant(int n, const C& c) {
  GenPolyT p(n);
  if (c != 0) p.terms_.emplace_back(Monomial(p.width(), 0), c);
  return p;
}

template <class C>
GenPolyT<C> GenPolyT<C>::variable(int n, int i, int power) {
  GenPolyT p(n);
  Monomial m(p.width(), 0);
  m.at(static_cast<std::size_t>(i - 1)) = power;
  p.terms_.emplace_back(std::move(m), C(1));
  return p;
}

template <class C>
GenPolyT<C> GenPolyT<C>::coefficient_symbol(int n, SubsetMask mask) {
  GenPolyT p(n);
  if (mask >= full_mask(n)) throw std::invalid_argument("no coefficient A_I for I = " + subset_name(mask));
  Monomial m(p.width(), 0);
  m[static_cast<std::size_t>(n) + mask] = 1;
  p.terms_.emplace_back(std::move(m), C(1));
  return p;
}

template <class C>
GenPolyT<C> GenPolyT<C>::from_terms(int n, std::vector<Term> terms) {
  std::vector<std::pair<long, std::size_t>> order;
  order.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) order.emplace_back(degree(terms[i].first), i);
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return terms[a.second].first > terms[b.second].first;
  });
  GenPolyT p(n);
  p.terms_.reserve(terms.size());
  for (const auto& [deg, idx] : order) {
    auto& t = terms[idx];
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    p.terms_.push_back(std::move(t));
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

template <class C>
C GenPolyT<C>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return graded_lex_greater(t.first, x);
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return C(0);
}

template <class C>
GenPolyT<C> GenPolyT<C>::merge(const GenPolyT& other, bool negate_other) const {
  GenPolyT r(std::max(n_, other.n_));
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin(), j = other.terms_.begin();
  long di = i != terms_.end() ? degree(i->first) : 0;
  long dj = j != other.terms_.end() ? degree(j->first) : 0;
  auto take_i = [&] {
    r.terms_.push_back(*i);
    if (++i != terms_.end()) di = degree(i->first);
  };
  auto take_j = [&] {
    r.terms_.push_back(*j);
    if (negate_other) r.terms_.back().second = -r.terms_.back().second;
    if (++j != other.terms_.end()) dj = degree(j->first);
  };
  while (i != terms_.end() && j != other.terms_.end()) {
    if (di != dj) {
      di > dj ? take_i() : take_j();
    } else if (i->first != j->first) {
      i->first > j->first ? take_i() : take_j();
    } else {
      C c = negate_other ? C(i->second - j->second) : C(i->second + j->second);
      if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
      if (++i != terms_.end()) di = degree(i->first);
      if (++j != other.terms_.end()) dj = degree(j->first);
    }
  }
  while (i != terms_.end()) take_i();
  while (j != other.terms_.end()) take_j();
  return r;
}

template <class C>
GenPolyT<C> GenPolyT<C>::operator+(const GenPolyT& other) const {
  return merge(other, false);
}

template <class C>
GenPolyT<C> GenPolyT<C>::operator-() const {
  GenPolyT r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class C>
GenPolyT<C> GenPolyT<C>::operator-(const GenPolyT& other) const {
  return merge(other, true);
}

template <class C>
GenPolyT<C> GenPolyT<C>::multiply(const GenPolyT& other, std::size_t term_cap) const {
  const int n = std::max(n_, other.n_);
  if (terms_.empty() || other.terms_.empty()) return GenPolyT(n);
  const std::size_t w = width();
  TermAccumulator<C> acc(w, std::min(std::max(terms_.size(), other.terms_.size()) * 4, term_cap));
  add_product(acc, *this, other, false, term_cap);
  return finish(n, acc, term_cap);
}

template <class C>
GenPolyT<C> GenPolyT<C>::shift_x(std::span<const std::int32_t> shift) const {
  GenPolyT r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < shift.size(); ++i) t.first[i] += shift[i];
  // A uniform shift changes every total degree equally, so only ties may reorder.
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return graded_lex_greater(a.first, b.first); });
  return r;
}

template <class C>
Rational GenPolyT<C>::evaluate(std::span<const Rational> x, std::span<const Rational> a) const {
  if (x.size() != static_cast<std::size_t>(n_) || a.size() != proper_subset_count(n_))
    throw std::invalid_argument("evaluate: expected " + std::to_string(n_) + " coordinates and " +
                                std::to_string(proper_subset_count(n_)) + " coefficient values");
  if (terms_.empty()) return 0;
  // Writing each value as n/d and each column's exponent range as [lo, hi],
  // every term becomes c * prod n^(e - lo) d^(hi - e), an integer, and the
  // sum is scaled once by prod (n/d)^lo / d^(hi - lo).
  const std::size_t w = width();
  std::vector<std::int32_t> lo(w, 0), hi(w, 0);
  for (std::size_t i = 0; i < w; ++i) lo[i] = hi[i] = terms_.front().first[i];
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < w; ++i) {
      lo[i] = std::min(lo[i], m[i]);
      hi[i] = std::max(hi[i], m[i]);
    }
  std::vector<std::vector<BigInt>> num_pow(w), den_pow(w);
  Rational scale = 1;
  for (std::size_t i = 0; i < w; ++i) {
    if (lo[i] == 0 && hi[i] == 0) continue;
    const Rational& base = i < x.size() ? x[i] : a[i - x.size()];
    scale *= power(base, lo[i]);
    const auto span = static_cast<std::size_t>(hi[i] - lo[i]);
    num_pow[i].assign(span + 1, BigInt(1));
    den_pow[i].assign(span + 1, BigInt(1));
    for (std::size_t k = 1; k <= span; ++k) {
      num_pow[i][k] = num_pow[i][k - 1] * base.get_num();
      den_pow[i][k] = den_pow[i][k - 1] * base.get_den();
    }
    scale /= Rational(den_pow[i][span]);
  }
  C total = 0;
  BigInt v;
  for (const auto& [m, c] : terms_) {
    v = 1;
    for (std::size_t i = 0; i < w; ++i) {
      if (num_pow[i].empty()) continue;
      v *= num_pow[i][static_cast<std::size_t>(m[i] - lo[i])];
      v *= den_pow[i][static_cast<std::size_t>(hi[i] - m[i])];
    }
    total += c * v;
  }
  return Rational(total) * scale;
}

template <class C>
GenPolyT<Rational> GenPolyT<C>::specialize(const std::map<SubsetMask, Rational>& values) const {
  std::vector<typename GenPolyT<Rational>::Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial mono = m;
    Rational v = Rational(c);
    for (const auto& [mask, value] : values) {
      auto& e = mono[static_cast<std::size_t>(n_) + mask];
      if (e != 0) {
        v *= power(value, e);
        e = 0;
      }
    }
    if (v != 0) raw.emplace_back(std::move(mono), std::move(v));
  }
  return GenPolyT<Rational>::from_terms(n_, std::move(raw));
}

template <class C>
std::string GenPolyT<C>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const C mag = neg ? C(-c) : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string factors;
    auto emit = [&factors](const std::string& name, std::int32_t e) {
      if (e == 0) return;
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    };
    for (int i = 0; i < n_; ++i) emit("x" + std::to_string(i + 1), m[static_cast<std::size_t>(i)]);
    for (SubsetMask mask = 0; mask < full_mask(n_); ++mask)
      emit("A" + subset_name(mask), m[static_cast<std::size_t>(n_) + mask]);
    std::string coef = mag.get_str(10);
    if (factors.empty()) out += coef;
    else if (coef == "1") out += factors;
    else out += coef + "*" + factors;
  }
  return out;
}

template class GenPolyT<BigInt>;
template class GenPolyT<Rational>;

// ---------------------------------------------------------------------------
// Coefficient specifications

ASpec parse_aspec(std::string_view text, int n) {
  check_arity(n);
  text = trim(text);
  ASpec spec;
  if (text.empty() || text == "symbolic") return spec;
  if (text == "zero" || text == "none") {
    for (SubsetMask m = 0; m < full_mask(n); ++m) spec[m] = 0;
    return spec;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find_first_of("; \t", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("coefficient assignment '" + std::string(item) + "' needs I=value");
    spec[parse_subset(item.substr(0, eq), n)] = parse_rational(item.substr(eq + 1));
  }
  return spec;
}

bool aspec_is_integral(const ASpec& spec) {
  return std::all_of(spec.begin(), spec.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

namespace {

template <class C>
GenPolyT<C> make_level(int n, const std::vector<GenPolyT<C>>& a) {
  GenPolyT<C> sum(n);
  for (int i = 1; i <= n; ++i) sum = sum + GenPolyT<C>::variable(n, i, 2);
  for (SubsetMask mask = 0; mask < full_mask(n); ++mask) {
    if (a[mask].is_zero()) continue;
    GenPolyT<C> term = a[mask];
    std::vector<std::int32_t> shift(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) shift[static_cast<std::size_t>(i)] = 1;
    sum = sum + term.shift_x(shift);
  }
  const std::vector<std::int32_t> down(static_cast<std::size_t>(n), -1);
  return sum.shift_x(down);
}

}  // namespace

GenPoly level_poly(int n) { return symbolic_context(n).level; }

VietaContext<BigInt> symbolic_context(int n, std::size_t term_cap) {
  check_arity(n);
  VietaContext<BigInt> ctx;
  ctx.n = n;
  ctx.term_cap = term_cap;
  for (SubsetMask mask = 0; mask < full_mask(n); ++mask)
    ctx.a.push_back(GenPoly::coefficient_symbol(n, mask));
  ctx.level = make_level(n, ctx.a);
  return ctx;
}

template <class C>
VietaContext<C> specialized_context(int n, const ASpec& spec, std::size_t term_cap) {
  check_arity(n);
  VietaContext<C> ctx;
  ctx.n = n;
  ctx.term_cap = term_cap;
  for (SubsetMask mask = 0; mask < full_mask(n); ++mask) {
    auto it = spec.find(mask);
    if (it == spec.end()) {
      ctx.a.push_back(GenPolyT<C>::coefficient_symbol(n, mask));
      continue;
    }
    if constexpr (std::is_same_v<C, BigInt>) {
      if (it->second.get_den() != 1)
        throw std::invalid_argument("A" + subset_name(mask) + " = " + decimal(it->second) +
                                    " is not an integer");
      ctx.a.push_back(GenPolyT<C>::constant(n, BigInt(it->second.get_num())));
    } else {
      ctx.a.push_back(GenPolyT<C>::constant(n, it->second));
    }
  }
  ctx.level = make_level(n, ctx.a);
  return ctx;
}

template VietaContext<BigInt> specialized_context<BigInt>(int, const ASpec&, std::size_t);
template VietaContext<Rational> specialized_context<Rational>(int, const ASpec&, std::size_t);

template <class C>
StateT<C> identity_state(int n) {
  check_arity(n);
  StateT<C> s;
  for (int i = 1; i <= n; ++i) s.push_back(GenPolyT<C>::variable(n, i));
  return s;
}

template State identity_state<BigInt>(int);
template RationalState identity_state<Rational>(int);

template <class C>
StateT<C> apply_Ek(const VietaContext<C>& ctx, const StateT<C>& state, int k) {
  const int n = ctx.n;
  if (k < 1 || k > n)
    throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  if (state.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("state has " + std::to_string(state.size()) + " coordinates, expected " +
                                std::to_string(n));
  const SubsetMask kbit = SubsetMask{1} << (k - 1);
  const SubsetMask others = full_mask(n) & ~kbit;

  // Products prod_{i in J} y_i over subsets J of the other indices, built on demand.
  std::unordered_map<SubsetMask, GenPolyT<C>> products;
  std::function<const GenPolyT<C>&(SubsetMask)> product = [&](SubsetMask j) -> const GenPolyT<C>& {
    if (auto it = products.find(j); it != products.end()) return it->second;
    GenPolyT<C> value = GenPolyT<C>::constant(n, C(1));
    if (j != 0) {
      // Split off the largest factor last so it is multiplied once.
      int best = -1;
      for (int i = 0; i < n; ++i)
        if (((j >> i) & 1) && (best < 0 || state[i].size() > state[static_cast<std::size_t>(best)].size()))
          best = i;
      const SubsetMask rest = j & ~(SubsetMask{1} << best);
      value = product(rest).multiply(state[static_cast<std::size_t>(best)], ctx.term_cap);
    }
    return products.emplace(j, std::move(value)).first->second;
  };

  const auto& yk = state[static_cast<std::size_t>(k - 1)];
  TermAccumulator<C> acc(ctx.level.width(), std::min(ctx.level.size() * product(others).size(), ctx.term_cap));
  add_product(acc, ctx.level, product(others), false, ctx.term_cap);
  add_product(acc, GenPolyT<C>::constant(n, C(1)), yk, true, ctx.term_cap);
  for (SubsetMask mask = 0; mask < full_mask(n); ++mask) {
    if (!(mask & kbit) || ctx.a[mask].is_zero()) continue;
    add_product(acc, ctx.a[mask], product(mask & ~kbit), true, ctx.term_cap);
  }
  GenPolyT<C> next = finish(n, acc, ctx.term_cap);
  StateT<C> out = state;
  out[static_cast<std::size_t>(k - 1)] = std::move(next);
  return out;
}

template State apply_Ek<BigInt>(const VietaContext<BigInt>&, const State&, int);
template RationalState apply_Ek<Rational>(const VietaContext<Rational>&, const RationalState&, int);

// ---------------------------------------------------------------------------
// Words

std::pair<Word, bool> reduce_word(const Word& w) {
  Word out;
  for (int k : w) {
    if (!out.empty() && out.back() == k) out.pop_back();
    else out.push_back(k);
  }
  const bool changed = out.size() != w.size();
  return {std::move(out), changed};
}

Word parse_word(std::string_view text) {
  Word w;
  text = trim(text);
  if (text.empty() || text == "e" || text == "id") return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(", ", pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(text.substr(pos, end - pos));
    if (!item.empty()) w.push_back(parse_index(item));
    pos = end + 1;
  }
  return w;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

std::vector<Word> enumerate_words(int n, int max_len) {
  check_arity(n);
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int k = 1; k <= n; ++k) {
        if (!out[i].empty() && out[i].back() == k) continue;
        Word w = out[i];
        w.push_back(k);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

template <class C>
StateT<C> apply_word(const VietaContext<C>& ctx, const Word& w, const WarningSink& warn) {
  for (int k : w)
    if (k < 1 || k > ctx.n)
      throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(ctx.n));
  auto [reduced, changed] = reduce_word(w);
  if (changed) {
    const std::string msg = "word " + word_name(w) + " is not reduced; using " + word_name(reduced);
    if (warn) warn(msg);
    else std::cerr << "warning: " << msg << '\n';
  }
  StateT<C> state = identity_state<C>(ctx.n);
  for (int k : reduced) state = apply_Ek(ctx, state, k);
  return state;
}

template State apply_word<BigInt>(const VietaContext<BigInt>&, const Word&, const WarningSink&);
template RationalState apply_word<Rational>(const VietaContext<Rational>&, const Word&, const WarningSink&);

State apply_word(int n, const Word& w) { return apply_word(symbolic_context(n), w); }

RationalState apply_word(int n, const Word& w, const ASpec& spec) {
  return apply_word(specialized_context<Rational>(n, spec), w);
}

RationalState specialize(const State& state, const ASpec& spec) {
  RationalState out;
  for (const auto& y : state) out.push_back(y.specialize(spec));
  return out;
}

std::array<Slope, 3> word_to_slopes(const Word& w) {
  struct Vec {
    std::int64_t p, q;
  };
  auto parallel = [](Vec a, Vec b) { return a.p * b.q - a.q * b.p == 0; };
  std::array<Vec, 3> v{Vec{1, 0}, Vec{0, 1}, Vec{1, -1}};
  for (int k : reduce_word(w).first) {
    if (k < 1 || k > 3) throw std::out_of_range("word_to_slopes: generator " + std::to_string(k) + " outside 1..3");
    const auto kk = static_cast<std::size_t>(k - 1);
    const Vec a = v[(kk + 1) % 3], b = v[(kk + 2) % 3];
    const Vec sum{a.p + b.p, a.q + b.q}, diff{a.p - b.p, a.q - b.q};
    v[kk] = parallel(sum, v[kk]) ? diff : sum;
  }
  return {Slope::reduce(v[0].q, v[0].p), Slope::reduce(v[1].q, v[1].p), Slope::reduce(v[2].q, v[2].p)};
}

template <class C>
std::vector<CoordinateReport> positivity_report(const StateT<C>& state) {
  std::vector<CoordinateReport> out;
  for (const auto& y : state) {
    CoordinateReport r;
    r.support = y.size();
    if (y.is_zero()) {
      r.min_coefficient = r.max_coefficient = "0";
    } else {
      C lo = y.terms().front().second, hi = lo;
      for (const auto& [m, c] : y.terms()) {
        if (c < lo) lo = c;
        if (c > hi) hi = c;
        if (c < 0) ++r.negative_count;
        r.max_bits = std::max(r.max_bits, bit_length(c));
      }
      r.min_coefficient = lo.get_str(10);
      r.max_coefficient = hi.get_str(10);
    }
    out.push_back(std::move(r));
  }
  return out;
}

template std::vector<CoordinateReport> positivity_report<BigInt>(const State&);
template std::vector<CoordinateReport> positivity_report<Rational>(const RationalState&);

// ---------------------------------------------------------------------------
// Numeric iteration

std::vector<Rational> iterate_division_form(int n, const Word& w, std::span<const Rational> point,
                                            std::span<const Rational> a) {
  check_arity(n);
  if (point.size() != static_cast<std::size_t>(n) || a.size() != proper_subset_count(n))
    throw std::invalid_argument("iterate_division_form: wrong number of values");
  std::vector<Rational> x(point.begin(), point.end());
  const Word reduced = reduce_word(w).first;
  for (std::size_t step = 0; step < reduced.size(); ++step) {
    const int k = reduced[step];
    if (k < 1 || k > n) throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    const auto kk = static_cast<std::size_t>(k - 1);
    if (x[kk] == 0)
      throw std::domain_error("division by zero at step " + std::to_string(step + 1) + " (E_" +
                              std::to_string(k) + "): coordinate " + std::to_string(k) + " vanished");
    const SubsetMask kbit = SubsetMask{1} << kk;
    Rational num = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != kk) num += x[i] * x[i];
    for (SubsetMask mask = 0; mask < full_mask(n); ++mask) {
      if ((mask & kbit) || a[mask] == 0) continue;
      Rational term = a[mask];
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) term *= x[static_cast<std::size_t>(i)];
      num += term;
    }
    x[kk] = num / x[kk];
  }
  return x;
}

bool numeric_crosscheck(const State& symbolic, const Word& w, std::span<const Rational> point,
                        std::span<const Rational> a) {
  if (symbolic.empty()) throw std::invalid_argument("numeric_crosscheck: empty state");
  const int n = symbolic.front().n();
  const auto expected = iterate_division_form(n, w, point, a);
  for (std::size_t i = 0; i < symbolic.size(); ++i)
    if (symbolic[i].evaluate(point, a) != expected[i]) return false;
  return true;
}

bool numeric_crosscheck(int n, const Word& w, std::span<const Rational> point,
                        std::span<const Rational> a) {
  return numeric_crosscheck(apply_word(n, w), w, point, a);
}

}  // namespace markoff::gen
