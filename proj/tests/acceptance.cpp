// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "markoff/checks.hpp"
#include "markoff/coeffs.hpp"
#include "markoff/genvieta.hpp"
#include "markoff/oracle.hpp"
#include "markoff/persist.hpp"
#include "markoff/render.hpp"
#include "markoff/sweep.hpp"
#include "oracles.hpp"
#include "xml_lint.hpp"

namespace fs = std::filesystem;
namespace gen = markoff::gen;
using markoff::CoeffMap;
using markoff::LatticePoint;
using markoff::Rational;
using markoff::Slope;

namespace {

using PointKey = std::pair<std::int64_t, std::int64_t>;

// Collects the first few problems of one criterion.
struct Findings {
  std::vector<std::string> notes;
  std::size_t checked = 0;
  void fail(const std::string& what) {
    if (notes.size() < 5) notes.push_back(what);
    else if (notes.size() == 5) notes.push_back("...");
  }
  bool ok() const { return notes.empty(); }
};

std::vector<Slope> sector_slopes(std::int64_t max_pq) {
  std::vector<Slope> out;
  for (std::int64_t n = 1; n <= max_pq; ++n)
    for (std::int64_t p = 0; p <= n; ++p)
      if (std::gcd(p, n - p) == 1) out.push_back(Slope::reduce(n - p, p));
  return out;
}

std::vector<Slope> all_slopes(std::int64_t max_pq) {
  std::vector<Slope> out{Slope::infinity()};
  for (std::int64_t p = 1; p <= max_pq; ++p)
    for (std::int64_t q = -max_pq; q <= max_pq; ++q) {
      const auto aq = q < 0 ? -q : q;
      if (aq + p <= max_pq && std::gcd(p, aq) == 1) out.push_back(Slope::reduce(q, p));
    }
  return out;
}

std::set<PointKey> support_of(const CoeffMap& f) {
  std::set<PointKey> out;
  for (const auto& [pt, c] : f) out.insert({pt.alpha, pt.beta});
  return out;
}

// Parents from the test-side exhaustive search; s = 1 has the base triple.
struct TripleSlopes {
  Slope s0, s1, sp;
};

TripleSlopes oracle_parents(const Slope& s) {
  const auto par = oracle::brute_parents(s.p(), s.q());
  if (!par) return {Slope::integer(0), Slope::infinity(), Slope::integer(-1)};
  return {Slope::reduce(par->s0.q, par->s0.p), Slope::reduce(par->s1.q, par->s1.p),
          Slope::reduce(par->sp.q, par->sp.p)};
}

Findings criterion_theorem(markoff::CoeffCache& cache) {
  Findings r;
  for (const auto& s : sector_slopes(30)) {
    const auto f = *markoff::coeff_map(s, cache);
    if (support_of(f) != oracle::brute_domain(s.p(), s.q())) r.fail("support differs at " + s.str());
    for (const auto& [pt, c] : f)
      if (c < 1) r.fail("coefficient " + markoff::decimal(c) + " at " + pt.str() + " for " + s.str());
    ++r.checked;
  }
  return r;
}

Findings criterion_edges(markoff::CoeffCache& cache) {
  Findings r;
  for (const auto& s : sector_slopes(30)) {
    const auto p = s.p(), q = s.q();
    if (p == 0 || q == 0) continue;
    const auto f = *markoff::coeff_map(s, cache);
    const markoff::Domain d(s);
    for (const auto& corner : {d.P(0), d.P(p - 1), d.Q(0), d.Q(q - 1)})
      if (f.at(corner) != 1) r.fail("corner " + corner.str() + " of " + s.str());
    std::vector<markoff::BigInt> left, right, bottom;
    for (std::int64_t i = 0; i < p; ++i) left.push_back(f.at(d.P(i)));
    for (std::int64_t j = 0; j < q; ++j) right.push_back(f.at(d.Q(j)));
    const auto start = d.Q(q - 1);
    for (std::int64_t k = 0; k < p + q; ++k) bottom.push_back(f.at({start.alpha + 2 * k, start.beta - 2 * k}));
    if (left != oracle::pascal_row(p - 1)) r.fail("P-edge of " + s.str());
    if (right != oracle::pascal_row(q - 1)) r.fail("Q-edge of " + s.str());
    if (bottom != oracle::pascal_row(p + q - 1)) r.fail("bottom edge of " + s.str());
    ++r.checked;
  }
  return r;
}

Findings criterion_markoff(markoff::CoeffCache& cache) {
  Findings r;
  for (const auto& s : sector_slopes(30)) {
    if (markoff::markoff_number(s, cache) != oracle::scalar_markoff(s.p(), s.q())) r.fail("m(" + s.str() + ")");
    ++r.checked;
  }
  const std::vector<std::pair<const char*, long>> spots{{"2", 5},    {"1", 2},      {"3", 13},
                                                        {"3/2", 29}, {"5/2", 194}, {"5/3", 433}};
  for (const auto& [text, m] : spots)
    if (markoff::markoff_number(Slope::parse(text), cache) != m) r.fail(std::string("spot value at ") + text);
  return r;
}

Findings criterion_oracle(markoff::CoeffCache& cache) {
  Findings r;
  for (const auto& t : all_slopes(16)) {
    const auto f = markoff::f_oracle(t);
    for (const auto& [e, c] : f.terms())
      if (e[0] + e[1] + e[2] != 1) r.fail("degree of a monomial of f_" + t.str());
    if (markoff::extract_F(f) != markoff::coeff_map_ext(t, cache)) r.fail("F differs at " + t.str());
    ++r.checked;
  }
  return r;
}

Findings criterion_negative(markoff::CoeffCache& cache) {
  Findings r;
  const char* below[] = {"-2", "-3", "-5/2", "-7/3", "-5/3", "-8/3", "-7/2", "-4", "-9/4", "-11/4"};
  const char* between[] = {"-1/2", "-1/3", "-2/3", "-2/5", "-3/5", "-3/4", "-1/4", "-4/7", "-5/8", "-3/7"};
  for (const auto* group : {below, between})
    for (int i = 0; i < 10; ++i) {
      const auto t = Slope::parse(group[i]);
      if (markoff::coeff_map_ext(t, cache) != markoff::extract_F(markoff::f_oracle(t))) r.fail("F_" + t.str());
      ++r.checked;
    }
  return r;
}

Findings criterion_vieta(markoff::CoeffCache& cache) {
  Findings r;
  const Rational three(3);
  auto f = [&](const Slope& s) { return markoff::evaluate(s, three, three, three, cache); };
  for (const auto& s : sector_slopes(12)) {
    if (s.is_zero() || s.is_infinity()) continue;
    const auto [s0, s1, sp] = oracle_parents(s);
    const auto fs = f(s), fsp = f(sp), f0 = f(s0), f1 = f(s1);
    if (fs + fsp != f0 * f1) r.fail("sum relation at " + s.str());
    if (fs * fsp != f0 * f0 + f1 * f1) r.fail("product relation at " + s.str());
    ++r.checked;
  }
  return r;
}

Findings criterion_lemmas(markoff::CoeffCache& cache) {
  Findings r;
  const std::set<PointKey> lam{{0, 0}, {2, 0}, {0, 2}};
  for (const auto& s : sector_slopes(20)) {
    if (!s.is_zero() && !s.is_infinity() && !(s == Slope::integer(1))) {
      const auto [s0, s1, sp] = oracle_parents(s);
      const auto xs = markoff::split_x(s).xs;
      std::set<PointKey> sum;
      for (const auto& a : oracle::brute_domain(s0.p(), s0.q()))
        for (const auto& b : oracle::brute_domain(s1.p(), s1.q()))
          for (const auto& c : lam) sum.insert({a.first + b.first + c.first, a.second + b.second + c.second});
      auto want = oracle::brute_domain(s.p(), s.q());
      const bool fresh = want.insert({xs.alpha, xs.beta}).second;
      if (!fresh || sum != want) r.fail("Minkowski identity at " + s.str());
      if (s.p() * xs.alpha + s.q() * xs.beta != -2) r.fail("phi(x_s) at " + s.str());
      std::set<PointKey> diff;
      const auto js = oracle::brute_domain(s.p(), s.q());
      for (const auto& pt : oracle::brute_domain(sp.p(), sp.q()))
        if (!js.count(pt)) diff.insert(pt);
      if (diff != std::set<PointKey>{{xs.alpha, xs.beta}}) r.fail("J_s' minus J_s at " + s.str());
    }
    if (auto bad = markoff::check_shift_bounds(s, cache)) r.fail(bad->str());
    ++r.checked;
  }
  return r;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational v(p, den(rng));
  v.canonicalize();
  return v;
}

Findings criterion_generalized(std::string& scan_summary) {
  Findings r;
  // Involution: E_k undoes the last letter of every reduced word of length <= 3.
  for (int n = 2; n <= 5; ++n) {
    const auto ctx = gen::symbolic_context(n);
    std::map<gen::Word, gen::State> states{{gen::Word{}, gen::identity_state<markoff::BigInt>(n)}};
    for (const auto& w : gen::enumerate_words(n, 3)) {
      if (w.empty()) continue;
      const auto& parent = states.at(gen::Word(w.begin(), w.end() - 1));
      const auto& state = states.emplace(w, gen::apply_Ek(ctx, parent, w.back())).first->second;
      if (gen::apply_Ek(ctx, state, w.back()) != parent)
        r.fail("involution, n=" + std::to_string(n) + " w=" + gen::word_name(w));
      ++r.checked;
    }
  }

  // Division-form cross-check at 10 random rational points per word.
  std::mt19937_64 rng(20261016);
  for (int n = 3; n <= 4; ++n) {
    const auto symbolic = gen::symbolic_context(n);
    std::uniform_int_distribution<int> small(-4, 4);
    for (const auto& w : gen::enumerate_words(n, 4)) {
      // n = 3 keeps every A_I formal; n = 4 substitutes random integers
      // into the A_I first, since the formal expansion exceeds the term cap.
      std::vector<Rational> a(gen::proper_subset_count(n));
      gen::State state;
      if (n == 3) {
        state = gen::apply_word(symbolic, w);
        for (auto& v : a) v = random_rational(rng);
      } else {
        gen::ASpec spec;
        for (gen::SubsetMask m = 0; m < gen::full_mask(n); ++m) spec[m] = a[m] = small(rng);
        state = gen::apply_word(gen::specialized_context<markoff::BigInt>(n, spec), w);
      }
      for (int k = 0; k < 10; ++k) {
        std::vector<Rational> x;
        std::vector<Rational> expected;
        for (int attempt = 0;; ++attempt) {
          x.clear();
          for (int i = 0; i < n; ++i) x.push_back(random_rational(rng));
          try {
            expected = gen::iterate_division_form(n, w, x, a);
            break;
          } catch (const std::domain_error&) {
            if (attempt > 50) throw;
          }
        }
        for (int i = 0; i < n; ++i)
          if (state[i].evaluate(x, a) != expected[i])
            r.fail("crosscheck n=" + std::to_string(n) + " w=" + gen::word_name(w));
        ++r.checked;
      }
    }
  }

  // A = 0, N = 3: no negative coefficients, coordinates equal the oracle polynomials.
  const auto zero = gen::parse_aspec("zero", 3);
  const auto scan = gen::run_scan(3, 8, zero, 1);
  if (scan.truncated || scan.negative_total != 0) r.fail("A=0 scan: " + scan.text());
  const auto ctx = gen::specialized_context<markoff::BigInt>(3, zero);
  for (const auto& w : gen::enumerate_words(3, 8)) {
    const auto state = gen::apply_word(ctx, w);
    const auto slopes = gen::word_to_slopes(w);
    for (int i = 0; i < 3; ++i) {
      std::vector<gen::GenPoly::Term> terms;
      const auto oracle_poly = markoff::f_oracle(slopes[i]);
      for (const auto& [e, c] : oracle_poly.terms()) {
        gen::Monomial m(3 + gen::proper_subset_count(3), 0);
        for (int j = 0; j < 3; ++j) m[j] = static_cast<std::int32_t>(e[j]);
        terms.emplace_back(std::move(m), c);
      }
      if (gen::GenPoly::from_terms(3, std::move(terms)) != state[i])
        r.fail("coordinate " + std::to_string(i + 1) + " of w=" + gen::word_name(w));
    }
    ++r.checked;
  }

  const auto symbolic_scan = gen::run_scan(3, 4, {}, 1);
  std::ostringstream os;
  os << "symbolic-A scan (n=3, length <= 4): " << symbolic_scan.records.size() << " coordinates, "
     << symbolic_scan.negative_total << " negative coefficients"
     << (symbolic_scan.truncated ? " (truncated)" : "");
  scan_summary = os.str();
  return r;
}

Findings criterion_render(markoff::CoeffCache& cache) {
  Findings r;
  for (const auto* text : {"2", "3/2", "5/2"}) {
    const auto s = Slope::parse(text);
    const auto f = *markoff::coeff_map(s, cache);
    const auto doc = xml_lint::parse(markoff::render_svg(s, f));
    if (!doc.ok) {
      r.fail(std::string(text) + ": " + doc.error);
      continue;
    }
    std::map<PointKey, std::string> labels;
    for (const auto& e : doc.elements) {
      if (!xml_lint::has_class(e, "value") || e.parent < 0) continue;
      const auto& cell = doc.elements[e.parent];
      labels[{std::stoll(cell.attrs.at("data-alpha")), std::stoll(cell.attrs.at("data-beta"))}] = e.text;
    }
    if (labels.size() != oracle::brute_domain(s.p(), s.q()).size()) r.fail(std::string("cell count for ") + text);
    const markoff::Domain d(s);
    for (const auto& corner : {d.P(0), d.P(s.p() - 1), d.Q(0), d.Q(s.q() - 1)}) {
      const auto it = labels.find({corner.alpha, corner.beta});
      if (it == labels.end() || it->second != "1") r.fail(std::string("corner label in ") + text);
    }
    ++r.checked;
  }
  return r;
}

Findings criterion_persistence() {
  Findings r;
  const auto dir = fs::temp_directory_path() / ("markoff-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  markoff::CoeffCache fresh;
  for (const auto& s : markoff::sweep_slopes(20)) markoff::coeff_map(s, fresh);
  markoff::save_cache(dir, fresh);
  markoff::CoeffCache loaded;
  markoff::load_cache(dir, loaded);
  markoff::CoeffCache recomputed;
  for (const auto& s : markoff::sweep_slopes(20)) {
    const auto f = loaded.find(s);
    if (!f || *f != *markoff::coeff_map(s, recomputed)) r.fail("round-trip at " + s.str());
    const auto [back_s, back_f] = markoff::parse_coeff_map(markoff::serialize_coeff_map(s, *markoff::coeff_map(s, fresh)));
    if (!(back_s == s) || back_f != *markoff::coeff_map(s, fresh)) r.fail("serialization at " + s.str());
    ++r.checked;
  }
  fs::remove_all(dir);

  std::string text, structured;
  for (int workers : {1, 2, 4}) {
    markoff::SweepConfig cfg;
    cfg.max_pq = 30;
    cfg.workers = workers;
    markoff::CoeffCache cache;
    const auto report = markoff::run_verify_sweep(cfg, cache);
    if (!report.ok()) r.fail("sweep failed with " + std::to_string(workers) + " workers");
    if (text.empty()) {
      text = report.text();
      structured = report.structured();
    } else if (text != report.text() || structured != report.structured()) {
      r.fail("report differs with " + std::to_string(workers) + " workers");
    }
  }
  return r;
}

}  // namespace

int main() {
  markoff::CoeffCache cache;
  std::string scan_summary;
  struct Criterion {
    int id;
    const char* title;
    std::function<Findings()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "support equals J_s and coefficients are positive, p+q <= 30", [&] { return criterion_theorem(cache); }},
      {2, "corner values are 1 and edges are Pascal rows, p+q <= 30", [&] { return criterion_edges(cache); }},
      {3, "f_s(1,1,1) follows the scalar recursion, p+q <= 30, and spot values", [&] { return criterion_markoff(cache); }},
      {4, "exchange-relation oracle agrees on all slopes with |q|+p <= 16", [&] { return criterion_oracle(cache); }},
      {5, "extended maps agree with the oracle on 20 negative slopes", [&] { return criterion_negative(cache); }},
      {6, "Vieta relations at (3,3,3), p+q <= 12", [&] { return criterion_vieta(cache); }},
      {7, "Minkowski identity, phi_s(x_s) = -2, and shift bounds, p+q <= 20", [&] { return criterion_lemmas(cache); }},
      {8, "generalized action: involution, cross-check, A=0 scan", [&] { return criterion_generalized(scan_summary); }},
      {9, "SVG diagrams for 2, 3/2, 5/2", [&] { return criterion_render(cache); }},
      {10, "persistence round-trip and sweep determinism", [&] { return criterion_persistence(); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Findings f;
    const auto start = std::chrono::steady_clock::now();
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f.fail(std::string("exception: ") + e.what());
    }
    failed += !f.ok();
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    std::cout << (f.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << f.checked << " cases, "
              << std::fixed << std::setprecision(1) << secs.count() << " s)" << std::endl;
    for (const auto& note : f.notes) std::cout << "       " << note << '\n';
    if (c.id == 8 && !scan_summary.empty()) std::cout << "INFO [8] " << scan_summary << '\n';
  }
  std::cout << (failed ? "FAILED: " : "all criteria passed") << (failed ? std::to_string(failed) + " criteria" : "")
            << '\n';
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
