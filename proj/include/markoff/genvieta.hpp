#ifndef MARKOFF_GENVIETA_HPP
#define MARKOFF_GENVIETA_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "markoff/bigint.hpp"
#include "markoff/slope.hpp"

namespace markoff::gen {

// Bitmask of a subset I of {1..N}; bit (i - 1) stands for index i.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxVariables = 10;
inline constexpr std::size_t kDefaultTermCap = 1'000'000;

// Number of formal coefficients A_I, one per proper subset I.
inline std::size_t proper_subset_count(int n) { return (std::size_t{1} << n) - 1; }
inline SubsetMask full_mask(int n) { return static_cast<SubsetMask>(proper_subset_count(n)); }

// "{1,3}", "{}" for the empty set.
std::string subset_name(SubsetMask mask);
// "1,3" -> mask; "{}" or "" -> 0. Throws std::invalid_argument.
SubsetMask parse_subset(std::string_view text, int n);

// Thrown when a polynomial grows past the configured term cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponents of x_1..x_N followed by exponents of A_I in increasing mask order.
using Monomial = std::vector<std::int32_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Laurent polynomial in x_1..x_N, polynomial in the A_I (I a proper subset),
// with coefficients in C (BigInt or Rational). Terms are sorted graded-lex,
// largest first, with no zero coefficients.
template <class C>
class GenPolyT {
 public:
  using Term = std::pair<Monomial, C>;

  GenPolyT() = default;
  explicit GenPolyT(int n) : n_(n) {}

  static GenPolyT constant(int n, const C& c);
  // x_i^power, i in 1..n.
  static GenPolyT variable(int n, int i, int power = 1);
  static GenPolyT coefficient_symbol(int n, SubsetMask mask);
  // Takes terms in any order; sums duplicates and drops zeros.
  static GenPolyT from_terms(int n, std::vector<Term> terms);

  int n() const { return n_; }
  std::size_t width() const { return static_cast<std::size_t>(n_) + proper_subset_count(n_); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(const Monomial& m) const;

  GenPolyT operator+(const GenPolyT& other) const;
  GenPolyT operator-(const GenPolyT& other) const;
  GenPolyT operator-() const;
  // Throws ResourceError when the product has more than term_cap terms.
  GenPolyT multiply(const GenPolyT& other, std::size_t term_cap = kDefaultTermCap) const;
  GenPolyT operator*(const GenPolyT& other) const { return multiply(other); }
  // Multiplication by the monomial prod x_i^shift[i].
  GenPolyT shift_x(std::span<const std::int32_t> shift) const;

  friend bool operator==(const GenPolyT&, const GenPolyT&) = default;

  // a must hold one value per proper subset.
  Rational evaluate(std::span<const Rational> x, std::span<const Rational> a) const;
  // Substitutes the listed A_I by values; other A_I stay symbolic.
  GenPolyT<Rational> specialize(const std::map<SubsetMask, Rational>& values) const;

  // "x1^-1*x2^2 + 2*A{1}*x2^-1"; "0" for the zero polynomial.
  std::string str() const;

 private:
  GenPolyT merge(const GenPolyT& other, bool negate_other) const;

  int n_ = 0;
  std::vector<Term> terms_;
};

extern template class GenPolyT<BigInt>;
extern template class GenPolyT<Rational>;

using GenPoly = GenPolyT<BigInt>;
using RationalGenPoly = GenPolyT<Rational>;

template <class C>
using StateT = std::vector<GenPolyT<C>>;
using State = StateT<BigInt>;
using RationalState = StateT<Rational>;

// Values substituted for some of the A_I.
using ASpec = std::map<SubsetMask, Rational>;

// Parses "symbolic" or "" (nothing substituted), "zero" or "none" (every
// A_I = 0), or pairs such as
// "1,3=2/5; 2=1; {}=-1" separated by ';' or whitespace.
ASpec parse_aspec(std::string_view text, int n);
bool aspec_is_integral(const ASpec& spec);

// The ring data of the action: A_I as polynomials (a symbol, or a constant
// after specialization) and the level function B.
template <class C>
struct VietaContext {
  int n = 0;
  std::vector<GenPolyT<C>> a;
  GenPolyT<C> level;
  std::size_t term_cap = kDefaultTermCap;
};

// B = (sum x_i^2 + sum_{I proper} A_I prod_{i in I} x_i) / prod x_i.
GenPoly level_poly(int n);

VietaContext<BigInt> symbolic_context(int n, std::size_t term_cap = kDefaultTermCap);
// Throws std::invalid_argument for C = BigInt when a value is not an integer.
template <class C>
VietaContext<C> specialized_context(int n, const ASpec& spec, std::size_t term_cap = kDefaultTermCap);

template <class C>
StateT<C> identity_state(int n);

// Replaces coordinate k (1-based) by B(x) prod_{i != k} y_i - y_k - sum_{k in I} A_I prod_{I - k} y_i.
template <class C>
StateT<C> apply_Ek(const VietaContext<C>& ctx, const StateT<C>& state, int k);

// Generator indices 1..N, applied left to right.
using Word = std::vector<int>;

// Cancels adjacent equal generators; returns whether anything changed.
std::pair<Word, bool> reduce_word(const Word& w);
Word parse_word(std::string_view text);
std::string word_name(const Word& w);
// All reduced words of length <= max_len in shortlex order, empty word first.
std::vector<Word> enumerate_words(int n, int max_len);

using WarningSink = std::function<void(const std::string&)>;

// Applies the word to the identity state. Unreduced words are reduced and
// a warning sent to `warn` (stderr when empty). Throws std::out_of_range on
// an index outside 1..N and ResourceError past the context's term cap.
template <class C>
StateT<C> apply_word(const VietaContext<C>& ctx, const Word& w, const WarningSink& warn = {});

State apply_word(int n, const Word& w);
RationalState apply_word(int n, const Word& w, const ASpec& spec);
RationalState specialize(const State& state, const ASpec& spec);

// Slopes tracked by the coordinates for N = 3, A = 0, starting at (0, inf, -1).
std::array<Slope, 3> word_to_slopes(const Word& w);

struct CoordinateReport {
  std::size_t support = 0;
  std::string min_coefficient;
  std::string max_coefficient;
  std::size_t negative_count = 0;
  std::size_t max_bits = 0;
};

template <class C>
std::vector<CoordinateReport> positivity_report(const StateT<C>& state);

// Iterates x_k <- (sum_{i != k} x_i^2 + sum_{I subset [N]-k} A_I prod x_i) / x_k.
// Throws std::domain_error naming the step when a coordinate is zero.
std::vector<Rational> iterate_division_form(int n, const Word& w, std::span<const Rational> point,
                                            std::span<const Rational> a);

// Compares the division-form iteration with the symbolic state evaluated at
// (point, a). `a` holds one value per proper subset.
bool numeric_crosscheck(int n, const Word& w, std::span<const Rational> point,
                        std::span<const Rational> a);
bool numeric_crosscheck(const State& symbolic, const Word& w, std::span<const Rational> point,
                        std::span<const Rational> a);

}  // namespace markoff::gen

#endif  // MARKOFF_GENVIETA_HPP
