#ifndef MARKOFF_SWEEP_HPP
#define MARKOFF_SWEEP_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "markoff/checks.hpp"
#include "markoff/coeffs.hpp"
#include "markoff/genvieta.hpp"

namespace markoff {

enum class OutputFormat { kText, kStructured };

struct SweepConfig {
  int max_pq = 30;
  int workers = 1;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::kText;
};

// Sector slopes q/p with 2 <= p + q <= max_pq, ordered by p + q, then value.
std::vector<Slope> sweep_slopes(int max_pq);

struct SlopeResult {
  Slope slope;
  VerifyReport report;
  std::vector<CheckFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct SweepReport {
  int max_pq = 0;
  std::vector<SlopeResult> results;

  bool ok() const;
  std::optional<CheckFailure> first_failure() const;
  // Byte-identical for identical inputs, independent of the worker count.
  std::string text() const;
  std::string structured() const;
};

// Coefficient, oracle, Minkowski identity, and shift-bound checks for every
// slope of the sweep, spread over config.workers threads.
SweepReport run_verify_sweep(const SweepConfig& config, CoeffCache& cache);

// Runs f(i) for i in [0, count) on `workers` threads.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& f);

namespace gen {

struct ScanRecord {
  Word word;
  int n = 0;
  int coordinate = 0;  // 1-based
  CoordinateReport report;
};

struct ScanResult {
  int n = 0;
  int max_len = 0;
  std::vector<ScanRecord> records;
  std::size_t negative_total = 0;
  bool truncated = false;  // stopped at the term cap
  std::string error;

  std::string text() const;
  std::string structured() const;
};

// Positivity records for every reduced word up to max_len. The A_I listed in
// `spec` are substituted (exactly, before expansion); the rest stay symbolic.
// On a term-cap overflow the records collected so far are returned with
// `truncated` set.
ScanResult run_scan(int n, int max_len, const ASpec& spec, int workers,
                    std::size_t term_cap = kDefaultTermCap);

std::string state_records_structured(int n, const Word& w, const std::vector<CoordinateReport>& reports);

}  // namespace gen

}  // namespace markoff

#endif  // MARKOFF_SWEEP_HPP
