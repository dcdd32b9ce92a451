#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "markoff/coeffs.hpp"
#include "markoff/genvieta.hpp"
#include "markoff/lattice.hpp"
#include "markoff/oracle.hpp"
#include "markoff/persist.hpp"
#include "markoff/render.hpp"
#include "markoff/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using markoff::Rational;
using markoff::Slope;
namespace gen = markoff::gen;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "text";
  std::string out;

  bool structured() const { return format == "structured"; }

  void emit(const std::string& text) const {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (out.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out);
    file << body;
  }
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", o.out, "Write output to FILE instead of stdout");
}

Slope parse_slope(const std::string& text) {
  try {
    return Slope::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("bad slope '" + text + "': " + e.what());
  }
}

json slope_json(const Slope& s) { return {{"slope", s.str()}, {"q", s.q()}, {"p", s.p()}}; }

int cmd_coeffs(const std::string& text, const Output& o) {
  const auto s = parse_slope(text);
  const auto f = markoff::coeff_map_ext(s);
  if (o.structured()) {
    o.emit(markoff::serialize_coeff_map(s, f));
    return kOk;
  }
  std::ostringstream os;
  for (const auto& [pt, c] : f) os << pt.str() << ' ' << markoff::decimal(c) << '\n';
  o.emit(os.str());
  return kOk;
}

int cmd_domain(const std::string& text, const Output& o) {
  const auto s = parse_slope(text);
  markoff::PointSet pts;
  if (s.in_sector()) {
    pts = markoff::Domain(s).enumerate();
  } else {
    pts = markoff::coeff_map_ext(s).support();
    markoff::canonicalize(pts);
  }
  if (o.structured()) {
    json doc = slope_json(s);
    json arr = json::array();
    for (const auto& pt : pts) arr.push_back({pt.alpha, pt.beta});
    doc["points"] = std::move(arr);
    o.emit(doc.dump(1));
  } else {
    o.emit(markoff::format_points(pts));
  }
  return kOk;
}

int cmd_markoff(const std::string& text, const Output& o) {
  const auto s = parse_slope(text);
  const auto m = markoff::markoff_number(s);
  if (o.structured()) {
    json doc = slope_json(s);
    doc["markoff_number"] = markoff::decimal(m);
    o.emit(doc.dump(1));
  } else {
    o.emit(markoff::decimal(m));
  }
  return kOk;
}

int cmd_eval(const std::string& text, const std::vector<std::string>& args, const Output& o) {
  const auto s = parse_slope(text);
  std::vector<Rational> xyz;
  for (const auto& a : args) {
    try {
      xyz.push_back(markoff::parse_rational(a));
    } catch (const std::exception& e) {
      throw UsageError("bad value '" + a + "': " + e.what());
    }
  }
  Rational v;
  try {
    v = markoff::evaluate(s, xyz[0], xyz[1], xyz[2]);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (o.structured()) {
    json doc = slope_json(s);
    doc["point"] = {markoff::decimal(xyz[0]), markoff::decimal(xyz[1]), markoff::decimal(xyz[2])};
    doc["value"] = markoff::decimal(v);
    o.emit(doc.dump(1));
  } else {
    o.emit(markoff::decimal(v));
  }
  return kOk;
}

int cmd_render(const std::vector<std::string>& texts, const std::string& style, const Output& o) {
  std::vector<std::pair<Slope, markoff::CoeffMap>> items;
  for (const auto& t : texts) {
    const auto s = parse_slope(t);
    if (!s.in_sector()) throw UsageError("render takes slopes with q >= 0, got " + s.str());
    items.emplace_back(s, *markoff::coeff_map(s));
  }
  if (style == "ascii") {
    std::string art;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items.size() > 1) art += (i ? "\n" : "") + std::string("s = ") + items[i].first.str() + "\n";
      art += markoff::render_ascii(items[i].first, items[i].second);
    }
    o.emit(art);
  } else if (items.size() == 1) {
    o.emit(markoff::render_svg(items[0].first, items[0].second));
  } else {
    o.emit(markoff::render_svg_gallery(items));
  }
  return kOk;
}

int cmd_oracle(const std::string& text, const Output& o) {
  const auto s = parse_slope(text);
  const auto r = markoff::f_oracle_walk(s);
  if (o.structured()) {
    json doc = slope_json(s);
    doc["polynomial"] = r.poly.str();
    doc["path_length"] = r.path_length;
    o.emit(doc.dump(1));
  } else {
    o.emit(r.poly.str());
  }
  return kOk;
}

int cmd_verify(const markoff::SweepConfig& cfg, const std::optional<std::string>& cache_flag, const Output& o) {
  if (cfg.max_pq < 2) throw UsageError("--max-pq must be at least 2");
  if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
  auto config = cfg;
  config.cache_dir = markoff::resolve_cache_dir(cache_flag);
  config.format = o.structured() ? markoff::OutputFormat::kStructured : markoff::OutputFormat::kText;
  markoff::CoeffCache cache;
  if (config.cache_dir && std::filesystem::is_directory(*config.cache_dir)) {
    try {
      markoff::load_cache(*config.cache_dir, cache);
    } catch (const std::exception& e) {
      std::cerr << "error: cache " << config.cache_dir->string() << ": " << e.what() << '\n';
      return kVerifyFailed;
    }
  }
  const auto report = markoff::run_verify_sweep(config, cache);
  o.emit(o.structured() ? report.structured() : report.text());
  if (const auto failure = report.first_failure()) {
    std::cerr << "FAIL " << failure->str() << '\n';
    return kVerifyFailed;
  }
  if (config.cache_dir) {
    std::filesystem::create_directories(*config.cache_dir);
    markoff::save_cache(*config.cache_dir, cache);
  }
  return kOk;
}

struct GenOptions {
  int n = 3;
  std::string word;
  std::string a = "symbolic";
  bool scan = false;
  int max_len = 4;
  int crosscheck = 0;
  std::uint64_t seed = 1;
  std::size_t term_cap = gen::kDefaultTermCap;
  int workers = 1;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational r(p, den(rng));
  r.canonicalize();
  return r;
}

int gen_crosscheck(const GenOptions& g, const gen::Word& w, const gen::ASpec& spec, const Output& o) {
  const auto state = gen::apply_word(gen::symbolic_context(g.n, g.term_cap), w);
  std::mt19937_64 rng(g.seed);
  int agree = 0;
  json points = json::array();
  for (int k = 0; k < g.crosscheck; ++k) {
    for (int attempt = 0;; ++attempt) {
      std::vector<Rational> x, a;
      for (int i = 0; i < g.n; ++i) x.push_back(random_rational(rng));
      for (gen::SubsetMask m = 0; m < gen::full_mask(g.n); ++m) {
        const auto it = spec.find(m);
        a.push_back(it != spec.end() ? it->second : random_rational(rng));
      }
      try {
        const bool ok = gen::numeric_crosscheck(state, w, x, a);
        agree += ok;
        json px = json::array();
        for (const auto& v : x) px.push_back(markoff::decimal(v));
        points.push_back({{"x", px}, {"agree", ok}});
        break;
      } catch (const std::domain_error&) {
        if (attempt > 100) throw;
      }
    }
  }
  if (o.structured()) {
    json doc = {{"format", "markoff-gen-crosscheck"}, {"version", 1}, {"n", g.n},
                {"word", gen::word_name(w)}, {"agree", agree}, {"total", g.crosscheck},
                {"points", std::move(points)}};
    o.emit(doc.dump(1));
  } else {
    o.emit(std::to_string(agree) + "/" + std::to_string(g.crosscheck) + " points agree");
  }
  return agree == g.crosscheck ? kOk : kVerifyFailed;
}

template <class C>
int print_state(const GenOptions& g, const gen::Word& w, const gen::StateT<C>& state, const Output& o) {
  const auto reports = gen::positivity_report(state);
  if (o.structured()) {
    json coords = json::array();
    for (std::size_t i = 0; i < state.size(); ++i)
      coords.push_back({{"coordinate", i + 1},
                        {"polynomial", state[i].str()},
                        {"support", reports[i].support},
                        {"min_coefficient", reports[i].min_coefficient},
                        {"max_coefficient", reports[i].max_coefficient},
                        {"negative_count", reports[i].negative_count}});
    json doc = {{"format", "markoff-gen-apply"}, {"version", 1}, {"n", g.n},
                {"word", gen::word_name(w)}, {"coordinates", std::move(coords)}};
    o.emit(doc.dump(1));
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < state.size(); ++i) os << 'y' << i + 1 << " = " << state[i].str() << '\n';
    o.emit(os.str());
  }
  return kOk;
}

int cmd_gen(const GenOptions& g, const Output& o) {
  if (g.n < 2 || g.n > gen::kMaxVariables)
    throw UsageError("--n must be between 2 and " + std::to_string(gen::kMaxVariables));
  gen::ASpec spec;
  try {
    spec = gen::parse_aspec(g.a, g.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --a: ") + e.what());
  }
  if (g.scan) {
    if (g.max_len < 0) throw UsageError("--max-len must be nonnegative");
    const auto result = gen::run_scan(g.n, g.max_len, spec, g.workers, g.term_cap);
    o.emit(o.structured() ? result.structured() : result.text());
    if (result.truncated) {
      std::cerr << "error: " << result.error << '\n';
      return kResource;
    }
    return kOk;
  }
  gen::Word w;
  try {
    w = gen::parse_word(g.word);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad --word: ") + e.what());
  }
  for (int k : w)
    if (k < 1 || k > g.n) throw UsageError("generator index " + std::to_string(k) + " outside 1.." + std::to_string(g.n));
  if (g.crosscheck > 0) return gen_crosscheck(g, w, spec, o);
  if (spec.empty()) return print_state(g, w, gen::apply_word(gen::symbolic_context(g.n, g.term_cap), w), o);
  if (gen::aspec_is_integral(spec))
    return print_state(g, w, gen::apply_word(gen::specialized_context<markoff::BigInt>(g.n, spec, g.term_cap), w), o);
  return print_state(g, w, gen::apply_word(gen::specialized_context<Rational>(g.n, spec, g.term_cap), w), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient maps of the formal Markoff map and the N-variable Vieta action"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string slope;
  Output out;

  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient map F_s");
  coeffs->add_option("slope", slope, "Slope q/p, integer, or inf")->required();
  add_output_flags(coeffs, out);
  coeffs->callback([&] { run = [&] { return cmd_coeffs(slope, out); }; });

  auto* domain = app.add_subcommand("domain", "Print the support J_s");
  domain->add_option("slope", slope)->required();
  add_output_flags(domain, out);
  domain->callback([&] { run = [&] { return cmd_domain(slope, out); }; });

  auto* markoff_cmd = app.add_subcommand("markoff", "Print f_s(1,1,1)");
  markoff_cmd->add_option("slope", slope)->required();
  add_output_flags(markoff_cmd, out);
  markoff_cmd->callback([&] { run = [&] { return cmd_markoff(slope, out); }; });

  std::vector<std::string> point;
  auto* eval = app.add_subcommand("eval", "Evaluate f_s at a rational point");
  eval->add_option("slope", slope)->required();
  eval->add_option("xyz", point, "x y z")->required()->expected(3);
  add_output_flags(eval, out);
  eval->callback([&] { run = [&] { return cmd_eval(slope, point, out); }; });

  std::vector<std::string> slopes;
  std::string style = "svg";
  auto* render = app.add_subcommand("render", "Draw honeycomb diagrams");
  render->add_option("slopes", slopes)->required();
  render->add_option("--style", style)->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", out.out, "Write output to FILE instead of stdout");
  render->callback([&] { run = [&] { return cmd_render(slopes, style, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Print f_s from the exchange-relation walk");
  oracle->add_option("slope", slope)->required();
  add_output_flags(oracle, out);
  oracle->callback([&] { run = [&] { return cmd_oracle(slope, out); }; });

  markoff::SweepConfig sweep;
  std::optional<std::string> cache_flag;
  auto* verify = app.add_subcommand("verify", "Check the positivity theorem and lemmas over a range of slopes");
  verify->add_option("--max-pq", sweep.max_pq, "Largest p + q");
  verify->add_option("--workers", sweep.workers, "Worker threads");
  verify->add_option("--cache-dir", cache_flag, "Coefficient cache directory");
  add_output_flags(verify, out);
  verify->callback([&] { run = [&] { return cmd_verify(sweep, cache_flag, out); }; });

  GenOptions g;
  auto* gen_cmd = app.add_subcommand("gen", "Vieta involutions on the N-variable variety");
  gen_cmd->add_option("--n", g.n, "Number of variables")->required();
  gen_cmd->add_option("--word", g.word, "Generators, e.g. 1,2,3");
  gen_cmd->add_option("--a", g.a, "symbolic | zero | none | pairs like \"1,3=2/5; {}=1\"");
  gen_cmd->add_flag("--scan", g.scan, "Positivity scan over all reduced words");
  gen_cmd->add_option("--max-len", g.max_len, "Longest word in a scan");
  gen_cmd->add_option("--crosscheck", g.crosscheck, "Compare with the division form at K random points");
  gen_cmd->add_option("--seed", g.seed, "Random seed for --crosscheck");
  gen_cmd->add_option("--term-cap", g.term_cap, "Largest allowed polynomial");
  gen_cmd->add_option("--workers", g.workers, "Worker threads for --scan");
  add_output_flags(gen_cmd, out);
  gen_cmd->callback([&] { run = [&] { return cmd_gen(g, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gen::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
