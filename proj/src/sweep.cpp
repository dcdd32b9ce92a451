#include "markoff/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace markoff {

using nlohmann::json;

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Slope> sweep_slopes(int max_pq) {
  std::vector<Slope> out;
  for (std::int64_t n = 2; n <= max_pq; ++n)
    for (std::int64_t p = n; p >= 0; --p)
      if (std::gcd(p, n - p) == 1) out.push_back(Slope::reduce(n - p, p));
  return out;
}

bool SweepReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const SlopeResult& r) { return r.ok(); });
}

std::optional<CheckFailure> SweepReport::first_failure() const {
  for (const auto& r : results)
    if (!r.ok()) return r.failures.front();
  return std::nullopt;
}

std::string SweepReport::text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.slope.str() << " " << (r.ok() ? "ok" : "FAIL") << " support=" << r.report.support_matches
       << " positive=" << r.report.all_positive << " corners=" << r.report.corners_are_one
       << " pascal=" << r.report.pascal_edges_match << " markoff=" << decimal(r.report.markoff_number)
       << "\n";
    for (const auto& f : r.failures) os << "  " << f.str() << "\n";
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.ok(); });
  os << (ok() ? "pass" : "fail") << ": " << results.size() << " slopes checked, " << failed
     << " failed (p+q <= " << max_pq << ")\n";
  return os.str();
}

std::string SweepReport::structured() const {
  json rows = json::array();
  for (const auto& r : results) {
    json failures = json::array();
    for (const auto& f : r.failures) {
      json jf = {{"check", f.check}, {"expected", f.expected}, {"got", f.got}};
      if (f.point) jf["point"] = {f.point->alpha, f.point->beta};
      failures.push_back(std::move(jf));
    }
    rows.push_back({{"slope", r.slope.str()},
                    {"q", r.slope.q()},
                    {"p", r.slope.p()},
                    {"ok", r.ok()},
                    {"support_matches", r.report.support_matches},
                    {"all_positive", r.report.all_positive},
                    {"corners_are_one", r.report.corners_are_one},
                    {"pascal_edges_match", r.report.pascal_edges_match},
                    {"markoff_number", decimal(r.report.markoff_number)},
                    {"failures", std::move(failures)}});
  }
  json doc = {{"format", "markoff-verify"}, {"version", 1}, {"max_pq", max_pq},
              {"ok", ok()}, {"slopes", rows.size()}, {"results", std::move(rows)}};
  return doc.dump(1) + "\n";
}

SweepReport run_verify_sweep(const SweepConfig& config, CoeffCache& cache) {
  SweepReport report;
  report.max_pq = config.max_pq;
  const auto slopes = sweep_slopes(config.max_pq);
  report.results.resize(slopes.size());
  parallel_for(slopes.size(), config.workers, [&](std::size_t i) {
    const Slope& s = slopes[i];
    SlopeResult r;
    r.slope = s;
    r.report = verify_theorem(s, cache);
    for (auto check : {check_theorem(s, cache), check_oracle(s, cache), check_minkowski_identity(s),
                       check_shift_bounds(s, cache)}) {
      if (check) r.failures.push_back(std::move(*check));
    }
    report.results[i] = std::move(r);
  });
  return report;
}

namespace gen {

namespace {

json record_json(const ScanRecord& r) {
  return {{"word", word_name(r.word)},
          {"n", r.n},
          {"coordinate", r.coordinate},
          {"support", r.report.support},
          {"min_coefficient", r.report.min_coefficient},
          {"max_coefficient", r.report.max_coefficient},
          {"negative_count", r.report.negative_count},
          {"max_bits", r.report.max_bits}};
}

template <class C>
void scan_levels(const VietaContext<C>& ctx, int max_len, int workers, ScanResult& result) {
  const int n = ctx.n;
  std::vector<std::pair<Word, StateT<C>>> level{{Word{}, identity_state<C>(n)}};
  auto emit = [&](const Word& w, const StateT<C>& state) {
    const auto reports = positivity_report(state);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      result.negative_total += reports[i].negative_count;
      result.records.push_back({w, n, static_cast<int>(i + 1), reports[i]});
    }
  };
  emit(Word{}, level.front().second);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Word, StateT<C>>> next;
    for (const auto& [w, st] : level)
      for (int k = 1; k <= n; ++k)
        if (w.empty() || w.back() != k) {
          Word child = w;
          child.push_back(k);
          next.emplace_back(std::move(child), StateT<C>{});
        }
    // Parent of next[i] is level[i / (n - 1)] except at length 1.
    try {
      parallel_for(next.size(), workers, [&](std::size_t i) {
        const std::size_t parent = len == 1 ? 0 : i / static_cast<std::size_t>(n - 1);
        next[i].second = apply_Ek(ctx, level[parent].second, next[i].first.back());
      });
    } catch (const ResourceError& ex) {
      result.truncated = true;
      result.error = ex.what();
      return;
    }
    for (const auto& [w, st] : next) emit(w, st);
    level = std::move(next);
  }
}

}  // namespace

ScanResult run_scan(int n, int max_len, const ASpec& spec, int workers, std::size_t term_cap) {
  ScanResult result;
  result.n = n;
  result.max_len = max_len;
  if (aspec_is_integral(spec)) {
    scan_levels(specialized_context<BigInt>(n, spec, term_cap), max_len, workers, result);
  } else {
    scan_levels(specialized_context<Rational>(n, spec, term_cap), max_len, workers, result);
  }
  return result;
}

std::string ScanResult::text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << "word=" << word_name(r.word) << " n=" << r.n << " coord=" << r.coordinate
       << " support=" << r.report.support << " min=" << r.report.min_coefficient
       << " max=" << r.report.max_coefficient << " negative=" << r.report.negative_count
       << " bits=" << r.report.max_bits << "\n";
  }
  if (truncated) os << "truncated: " << error << "\n";
  os << negative_total << " negative coefficients in " << records.size() << " coordinates (n=" << n
     << ", words up to length " << max_len << ")\n";
  return os.str();
}

std::string ScanResult::structured() const {
  json rows = json::array();
  for (const auto& r : records) rows.push_back(record_json(r));
  json doc = {{"format", "markoff-gen-scan"}, {"version", 1}, {"n", n},
              {"max_len", max_len}, {"negative_total", negative_total},
              {"truncated", truncated}, {"records", std::move(rows)}};
  if (truncated) doc["error"] = error;
  return doc.dump(1) + "\n";
}

std::string state_records_structured(int n, const Word& w, const std::vector<CoordinateReport>& reports) {
  json rows = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i)
    rows.push_back(record_json({w, n, static_cast<int>(i + 1), reports[i]}));
  json doc = {{"format", "markoff-gen-scan"}, {"version", 1}, {"n", n}, {"records", std::move(rows)}};
  return doc.dump(1) + "\n";
}

}  // namespace gen

}  // namespace markoff
