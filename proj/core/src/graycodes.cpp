#include "dickson/graycodes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "dickson/errors.hpp"

namespace dickson {

namespace {

void require_square(const Modulus& mod) {
  if (mod.e() != 2) throw UnsupportedExponent("Gray map and homogeneous weight need e = 2");
}

// Rows x^j g mod x^n - 1 as small integers, with a weight lookup table.
struct CodeTables {
  std::uint32_t m = 0;
  std::size_t n = 0;
  int rank = 0;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<int> weight;

  explicit CodeTables(const CyclicCodeSpec& code) {
    const std::uint64_t p = code.p;
    m = static_cast<std::uint32_t>(p * p);
    n = code.n;
    rank = code.rank;
    std::vector<std::uint32_t> g(n, 0);
    for (std::size_t i = 0; i < code.g.coeffs().size(); ++i) {
      g[i] = static_cast<std::uint32_t>(code.g.coeffs()[i].get_ui());
    }
    for (int j = 0; j < rank; ++j) {
      std::vector<std::uint32_t> row(n);
      for (std::size_t i = 0; i < n; ++i) row[(i + static_cast<std::size_t>(j)) % n] = g[i];
      rows.push_back(std::move(row));
    }
    weight.resize(m);
    for (std::uint32_t v = 0; v < m; ++v) {
      weight[v] = v == 0 ? 0 : (v % p == 0 ? static_cast<int>(p) : static_cast<int>(p - 1));
    }
  }

  int weight_of(const std::vector<std::uint32_t>& c) const {
    int w = 0;
    for (std::uint32_t v : c) w += weight[v];
    return w;
  }

  void add_row(std::vector<std::uint32_t>& c, int j, std::uint32_t times) const {
    const auto& row = rows[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint32_t>((c[i] + static_cast<std::uint64_t>(times) * row[i]) % m);
    }
  }

  void add_row_once(std::vector<std::uint32_t>& c, int j) const {
    const auto& row = rows[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t s = c[i] + row[i];
      c[i] = s >= m ? s - m : s;
    }
  }
};

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs task(i) for i in [0, count) across workers and min-reduces the result.
template <typename Task>
int parallel_min(std::size_t count, unsigned workers, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  int best = std::numeric_limits<int>::max();
  auto body = [&] {
    int local = std::numeric_limits<int>::max();
    for (std::size_t i = next++; i < count; i = next++) local = std::min(local, task(i));
    const std::scoped_lock guard(lock);
    best = std::min(best, local);
  };
  const unsigned n = std::min<std::size_t>(workers, std::max<std::size_t>(count, 1));
  if (n <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(body);
  }
  return best;
}

double message_space(const CyclicCodeSpec& code) {
  return std::pow(static_cast<double>(code.p), 2.0 * code.rank);
}

// One unit-orbit representative family: messages zero before `lead`, equal to
// `lead_value` at `lead`, `second` at lead + 1, and free afterwards.
struct OrbitTask {
  int lead;
  std::uint32_t lead_value;
  std::uint32_t second;
};

int enumerate_task(const CodeTables& t, const OrbitTask& task, std::uint64_t& visited) {
  std::vector<std::uint32_t> c(t.n, 0);
  t.add_row(c, task.lead, task.lead_value);
  int first_free = task.lead + 1;
  if (first_free < t.rank) {
    t.add_row(c, first_free, task.second);
    ++first_free;
  }
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(t.rank), 0);
  int best = t.weight_of(c);
  std::uint64_t count = 1;
  for (;;) {
    int d = t.rank - 1;
    for (; d >= first_free; --d) {
      t.add_row_once(c, d);
      if (++digits[static_cast<std::size_t>(d)] < t.m) break;
      digits[static_cast<std::size_t>(d)] = 0;
    }
    if (d < first_free) break;
    best = std::min(best, t.weight_of(c));
    ++count;
  }
  visited += count;
  return best;
}

std::uint64_t chunk_seed_part(std::uint64_t seed, int shift) {
  return static_cast<std::uint32_t>(seed >> shift);
}

}  // namespace

int hom_weight(const RingElem& u) {
  require_square(u.modulus());
  switch (u.classify()) {
    case ElementClass::zero:
      return 0;
    case ElementClass::zero_divisor:
      return static_cast<int>(u.modulus().p());
    case ElementClass::unit:
      break;
  }
  return static_cast<int>(u.modulus().p() - 1);
}

std::vector<std::uint64_t> gray_map(std::span<const RingElem> v) {
  std::vector<std::uint64_t> out;
  if (v.empty()) return out;
  const std::uint64_t p = v.front().modulus().p();
  out.reserve(v.size() * p);
  for (const RingElem& u : v) {
    require_square(u.modulus());
    if (u.modulus().p() != p) throw ModulusMismatch();
    const std::uint64_t x = u.value().get_ui();
    const std::uint64_t a = x % p;
    const std::uint64_t b = x / p;
    for (std::uint64_t k = 0; k < p; ++k) out.push_back((b + k * a) % p);
  }
  return out;
}

CyclicCodeSpec build_code(const Factorization& f, std::uint32_t subset) {
  require_square(f.modulus);
  const auto factors = f.factors();
  if (factors.size() >= 32) throw InvalidArgument("too many factors for a bitmask subset");
  const std::uint32_t all = (std::uint32_t{1} << factors.size()) - 1;
  if ((subset & ~all) != 0) throw InvalidArgument("subset names a factor that does not exist");
  if (subset == 0) throw EmptyCode("empty subset: the generator would be 1");
  if (subset == all && f.complete()) throw EmptyCode("generator x^n - 1 gives the zero code");

  RingPoly g(f.modulus, std::initializer_list<long>{1});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if ((subset >> i) & 1U) g = poly_mul_mod(g, factors[i]);
  }
  CyclicCodeSpec code(std::move(g));
  code.p = f.modulus.p();
  code.n = static_cast<std::size_t>(code.p + 1);
  code.subset = subset;
  code.rank = static_cast<int>(code.n) - code.g.degree();
  if (code.rank < 1) throw EmptyCode("generator has full degree");
  if (!code.g.is_monic() || !code.g.is_self_reciprocal()) {
    throw InternalInconsistency("generator is not monic and self-reciprocal");
  }
  return code;
}

CyclicCodeSpec build_code(const Factorization& f, std::span<const int> indices) {
  std::uint32_t subset = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) throw InvalidArgument("factor index out of range");
    subset |= std::uint32_t{1} << i;
  }
  return build_code(f, subset);
}

GrayParams gray_params(const CyclicCodeSpec& code) {
  GrayParams out;
  out.length = code.n * code.p;
  out.log_size = code.log_size();
  out.griesmer_d = griesmer_max_d(out.length, 2 * code.rank, code.p);
  return out;
}

const char* to_string(DistanceMethod method) {
  return method == DistanceMethod::exhaustive ? "exhaustive" : "sampled";
}

double budget_from_env(double fallback) {
  if (const char* raw = std::getenv("DICKSON_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end != raw && v > 0) return v;
  }
  return fallback;
}

DistanceResult min_distance_exhaustive(const CyclicCodeSpec& code, unsigned workers,
                                       double budget) {
  if (code.rank < 1) throw EmptyCode("code has rank 0");
  if (message_space(code) > budget) {
    throw BudgetExceeded("p^(2 rank) messages exceed the exhaustive budget");
  }
  const CodeTables t(code);
  const auto p = static_cast<std::uint32_t>(code.p);

  // A unit multiple has the same homogeneous weight, so the first nonzero
  // coordinate can be scaled to 1 (unit) or p (zero divisor).
  std::vector<OrbitTask> tasks;
  for (int lead = 0; lead < t.rank; ++lead) {
    for (std::uint32_t v : {std::uint32_t{1}, p}) {
      if (lead + 1 < t.rank) {
        for (std::uint32_t s = 0; s < t.m; ++s) tasks.push_back({lead, v, s});
      } else {
        tasks.push_back({lead, v, 0});
      }
    }
  }
  std::vector<std::uint64_t> visited(tasks.size(), 0);
  const int d = parallel_min(tasks.size(), resolve_workers(workers), [&](std::size_t i) {
    return enumerate_task(t, tasks[i], visited[i]);
  });

  DistanceResult out;
  out.d = d;
  out.method = DistanceMethod::exhaustive;
  for (std::uint64_t v : visited) out.samples_used += v;
  return out;
}

DistanceResult min_distance_sampled(const CyclicCodeSpec& code, std::uint64_t samples,
                                    std::uint64_t rng_seed, unsigned workers) {
  if (code.rank < 1) throw EmptyCode("code has rank 0");
  if (samples < 1) throw InvalidArgument("samples must be positive");
  const double space = message_space(code);
  if (static_cast<double>(samples) >= space - 1) {
    DistanceResult out = min_distance_exhaustive(code, workers, space);
    out.rng_seed = rng_seed;
    return out;
  }

  const CodeTables t(code);
  constexpr std::uint64_t kChunk = 1 << 14;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  // Streams are keyed by chunk, not by worker, so any worker count draws the
  // same messages.
  const int d = parallel_min(chunks, resolve_workers(workers), [&](std::size_t chunk) {
    std::seed_seq seq{chunk_seed_part(rng_seed, 0), chunk_seed_part(rng_seed, 32),
                      static_cast<std::uint64_t>(chunk_seed_part(chunk, 0)),
                      static_cast<std::uint64_t>(chunk_seed_part(chunk, 32))};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint32_t> digit(0, t.m - 1);
    const std::uint64_t begin = chunk * kChunk;
    const std::uint64_t count = std::min(kChunk, samples - begin);
    std::vector<std::uint32_t> u(static_cast<std::size_t>(t.rank));
    std::vector<std::uint64_t> c(t.n);
    std::vector<std::uint32_t> reduced(t.n);
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t s = 0; s < count; ++s) {
      bool nonzero = false;
      while (!nonzero) {
        for (auto& x : u) {
          x = digit(rng);
          nonzero = nonzero || x != 0;
        }
      }
      std::fill(c.begin(), c.end(), 0);
      for (int j = 0; j < t.rank; ++j) {
        const auto& row = t.rows[static_cast<std::size_t>(j)];
        const std::uint64_t uj = u[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < t.n; ++i) c[i] += uj * row[i];
      }
      for (std::size_t i = 0; i < t.n; ++i) reduced[i] = static_cast<std::uint32_t>(c[i] % t.m);
      best = std::min(best, t.weight_of(reduced));
    }
    return best;
  });

  DistanceResult out;
  out.d = d;
  out.method = DistanceMethod::sampled;
  out.samples_used = samples;
  out.rng_seed = rng_seed;
  return out;
}

int griesmer_max_d(std::uint64_t N, int K, std::uint64_t q) {
  if (K < 1 || q < 2) throw InvalidArgument("Griesmer bound needs K >= 1 and q >= 2");
  auto length_needed = [&](std::uint64_t d) {
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (int i = 0; i < K; ++i) {
      if (power >= d) {
        total += static_cast<std::uint64_t>(K - i);  // every remaining term is 1
        break;
      }
      total += (d + power - 1) / power;
      power *= q;
    }
    return total;
  };
  std::uint64_t d = 0;
  while (length_needed(d + 1) <= N) ++d;
  return static_cast<int>(d);
}

bool PairingReport::intact() const {
  return std::none_of(pairs.begin(), pairs.end(),
                      [](const PairStatus& s) { return s.state == PairState::split; });
}

PairingReport classify_pairing(std::uint32_t subset, const Factorization& f) {
  const auto factors = f.factors();
  const BigInt& m = f.modulus.value();
  PairingReport report;
  report.minus_one = (subset & 1U) != 0;
  report.plus_one = (subset & 2U) != 0;
  std::vector<bool> used(factors.size(), false);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() != 2 || used[i] || factors[i].coeffs()[1] == 0) continue;
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (factors[j].degree() != 2 || used[j]) continue;
      BigInt sum = factors[i].coeffs()[1] + factors[j].coeffs()[1];
      if (sum != m && sum != 0) continue;
      used[i] = used[j] = true;
      const bool a = ((subset >> i) & 1U) != 0;
      const bool b = ((subset >> j) & 1U) != 0;
      report.pairs.push_back({static_cast<int>(i), static_cast<int>(j),
                              a && b   ? PairState::included
                              : a || b ? PairState::split
                                       : PairState::excluded});
      break;
    }
  }
  return report;
}

bool SymmetryReport::dichotomy_holds() const {
  return intact_max_d >= 0 && broken_min_d >= 0 && intact_max_d < broken_min_d;
}

namespace {

CodeRow make_row(const Factorization& f, const CyclicCodeSpec& code, DistanceResult distance) {
  CodeRow row;
  row.p = code.p;
  row.rank = code.rank;
  row.subset = code.subset;
  row.intact = classify_pairing(code.subset, f).intact();
  row.distance = distance;
  const std::uint64_t N = code.n * code.p;
  row.griesmer_2k = griesmer_max_d(N, 2 * code.rank, code.p);
  row.griesmer_k = griesmer_max_d(N, code.rank, code.p);
  return row;
}

}  // namespace

SymmetryReport symmetry_experiment(const Factorization& f, unsigned workers, double budget) {
  require_square(f.modulus);
  const std::size_t count = f.factors().size();
  if (count < 3 || count >= 32) throw InvalidArgument("factor count unsuitable for the experiment");
  const std::uint32_t all = (std::uint32_t{1} << count) - 1;
  constexpr int kComparedRank = 4;  // two quadratics left out

  SymmetryReport report;
  for (std::uint32_t subset = 1; subset < all; ++subset) {
    if (std::popcount(subset) != static_cast<int>(count) - 2) continue;
    const CyclicCodeSpec code = build_code(f, subset);
    CodeRow row = make_row(f, code, min_distance_exhaustive(code, workers, budget));
    if (row.rank == kComparedRank) {
      int& slot = row.intact ? report.intact_max_d : report.broken_min_d;
      if (row.intact) {
        slot = std::max(slot, row.distance.d);
      } else {
        slot = slot < 0 ? row.distance.d : std::min(slot, row.distance.d);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<CodeRow> search_codes(const Factorization& f, const SearchOptions& options) {
  require_square(f.modulus);
  if (options.rank_min < 1 || options.rank_max < options.rank_min) {
    throw InvalidArgument("rank range must satisfy 1 <= min <= max");
  }
  const auto factors = f.factors();
  if (factors.size() > 24) throw InvalidArgument("too many factors to enumerate subsets");
  const std::uint32_t all = (std::uint32_t{1} << factors.size()) - 1;

  std::vector<CodeRow> rows;
  for (int rank = options.rank_min; rank <= options.rank_max; ++rank) {
    std::optional<CodeRow> best;
    for (std::uint32_t subset = 1; subset < all; ++subset) {
      int degree = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if ((subset >> i) & 1U) degree += factors[i].degree();
      }
      if (static_cast<int>(f.modulus.p() + 1) - degree != rank) continue;
      const CyclicCodeSpec code = build_code(f, subset);
      const DistanceResult d =
          message_space(code) <= options.budget
              ? min_distance_exhaustive(code, options.workers, options.budget)
              : min_distance_sampled(code, options.samples, options.rng_seed, options.workers);
      if (!best || d.d > best->distance.d) best = make_row(f, code, d);
    }
    if (best) rows.push_back(std::move(*best));
  }
  return rows;
}

void write_codes_csv(std::ostream& out, std::span<const CodeRow> rows) {
  out << "p,rank,log_size,subset_bitmask,pairing_class,d,method,samples,griesmer_2k,griesmer_k\n";
  for (const CodeRow& r : rows) {
    out << r.p << ',' << r.rank << ',' << 2 * r.rank << ',' << r.subset << ','
        << (r.intact ? "intact" : "broken") << ',' << r.distance.d << ','
        << to_string(r.distance.method) << ',' << r.distance.samples_used << ','
        << r.griesmer_2k << ',' << r.griesmer_k << '\n';
  }
}

}  // namespace dickson
