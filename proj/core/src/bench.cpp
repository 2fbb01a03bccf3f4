#include "dickson/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "dickson/baseline.hpp"
#include "dickson/engine.hpp"
#include "dickson/errors.hpp"
#include "dickson/ring.hpp"

namespace dickson {

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn, int batch) {
  const auto start = Clock::now();
  for (int i = 0; i < batch; ++i) fn(i);
  const std::chrono::duration<double, std::milli> elapsed = Clock::now() - start;
  return elapsed.count() / batch;
}

// Warm-up sizes the batch, then `repetitions` runs; returns the median.
template <typename Fn>
double median_ms(Fn&& fn, const BenchConfig& config) {
  const double warm = time_ms(fn, 1);
  int batch = 1;
  if (warm < config.min_run_ms) {
    batch = static_cast<int>(std::ceil(config.min_run_ms / std::max(warm, 1e-4)));
    batch = std::clamp(batch, 1, 100000);
  }
  std::vector<double> runs;
  for (int r = 0; r < config.repetitions; ++r) runs.push_back(time_ms(fn, batch));
  std::sort(runs.begin(), runs.end());
  const std::size_t n = runs.size();
  return n % 2 == 1 ? runs[n / 2] : 0.5 * (runs[n / 2 - 1] + runs[n / 2]);
}

std::string format_ms(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

BenchRow bench_point(std::uint64_t p, int e, const BenchConfig& config) {
  if (config.repetitions < 1) throw InvalidArgument("repetitions must be positive");
  BenchRow row;
  row.p = p;
  row.e = e;

  std::uint64_t call = 0;
  row.engine_ms = median_ms(
      [&](int) {
        FactorOptions opts;
        opts.search = SeedSearch::random;
        opts.rng_seed = config.rng_seed + call++;
        opts.verify = false;
        const Factorization f = factor(p, e, opts);
        if (f.quadratics.size() > p) std::abort();  // keeps the call observable
      },
      config);

  if (config.with_baseline) {
    row.baseline_ms = median_ms(
        [&](int) {
          const auto factors = baseline_factor(p, e, config.rng_seed + call++);
          if (factors.empty()) std::abort();
        },
        config);
  }
  return row;
}

std::vector<BenchRow> bench_suite(std::span<const std::uint64_t> p_values,
                                  std::span<const int> e_values, const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::uint64_t p : p_values) {
    for (int e : e_values) rows.push_back(bench_point(p, e, config));
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "p,e,engine_ms,baseline_ms,ratio\n";
  for (const BenchRow& r : rows) {
    out << r.p << ',' << r.e << ',' << format_ms(r.engine_ms) << ',';
    if (r.baseline_ms) out << format_ms(*r.baseline_ms);
    out << ',';
    if (auto ratio = r.ratio()) out << format_ms(*ratio);
    out << '\n';
  }
}

std::vector<std::uint64_t> log_spaced_primes(std::uint64_t pmin, std::uint64_t pmax, int count) {
  pmin = std::max<std::uint64_t>(pmin, 3);
  if (pmax < pmin || count < 1) return {};
  auto next_prime = [](std::uint64_t n) {
    while (!is_prime(n)) ++n;
    return n;
  };
  std::uint64_t top = pmax;
  while (top >= pmin && !is_prime(top)) --top;
  if (top < pmin) return {};

  std::vector<std::uint64_t> out;
  const double lo = std::log(static_cast<double>(pmin));
  const double hi = std::log(static_cast<double>(top));
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    const auto target = static_cast<std::uint64_t>(std::llround(std::exp(lo + t * (hi - lo))));
    const std::uint64_t q = i == count - 1 && count > 1 ? top : next_prime(std::max(target, pmin));
    if (q <= top) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  return linear_fit(lx, ly).slope;
}

}  // namespace dickson
