#pragma once

// Timing harness comparing the structural engine against the classical
// baseline, plus the small regression helpers used to read the results.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace dickson {

struct BenchRow {
  std::uint64_t p = 0;
  int e = 1;
  double engine_ms = 0.0;
  std::optional<double> baseline_ms;

  std::optional<double> ratio() const {
    if (!baseline_ms || engine_ms <= 0.0) return std::nullopt;
    return *baseline_ms / engine_ms;
  }
};

struct BenchConfig {
  int repetitions = 5;      // timed runs per point; one extra warm-up is discarded
  double min_run_ms = 2.0;  // short calls are batched until a run takes this long
  bool with_baseline = true;
  std::uint64_t rng_seed = 1;
};

/// Median wall-clock per call for one (p, e). The engine is timed cold: the
/// random primitive search is part of every call and verification is off.
BenchRow bench_point(std::uint64_t p, int e, const BenchConfig& config);

/// One row per (p, e) pair in the cross product, in input order.
std::vector<BenchRow> bench_suite(std::span<const std::uint64_t> p_values,
                                  std::span<const int> e_values, const BenchConfig& config);

/// "p,e,engine_ms,baseline_ms,ratio"; missing baseline fields are left empty.
void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

/// Roughly log-spaced primes in [pmin, pmax]: for each target the next prime
/// at or above it, deduplicated, ascending. Always includes the largest prime
/// <= pmax when count >= 2.
std::vector<std::uint64_t> log_spaced_primes(std::uint64_t pmin, std::uint64_t pmax, int count);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace dickson
