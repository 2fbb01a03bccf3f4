#pragma once

// Cyclic LCD codes over Z/p^2 generated by products of factors of
// x^{p+1} - 1, their Gray images over F_p, and minimum-distance search.
//
// Distances are homogeneous weights, which equal Hamming weights of the Gray
// image. A codeword is u(x) g(x) mod x^n - 1 with deg u < rank.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dickson/engine.hpp"
#include "dickson/ring.hpp"

namespace dickson {

/// 0 for zero, p for nonzero multiples of p, p - 1 for units. Needs e = 2.
int hom_weight(const RingElem& u);

/// a + b p  ->  (b, b + a, b + 2a, ..., b + (p-1) a) mod p, coordinate-wise.
std::vector<std::uint64_t> gray_map(std::span<const RingElem> v);

struct CyclicCodeSpec {
  explicit CyclicCodeSpec(RingPoly generator) : g(std::move(generator)) {}

  std::uint64_t p = 0;
  std::size_t n = 0;
  std::uint32_t subset = 0;  // bit i set when factor i is in the generator
  RingPoly g;
  int rank = 0;  // n - deg g

  std::size_t log_size() const { return 2 * static_cast<std::size_t>(rank); }
};

/// Generator from a factor subset; bit i selects f.factors()[i].
/// Throws EmptyCode when the subset is empty or covers every factor.
CyclicCodeSpec build_code(const Factorization& f, std::uint32_t subset);
CyclicCodeSpec build_code(const Factorization& f, std::span<const int> indices);

struct GrayParams {
  std::size_t length = 0;    // N = n p
  std::size_t log_size = 0;  // 2 rank
  int griesmer_d = 0;        // at K = 2 rank
};

GrayParams gray_params(const CyclicCodeSpec& code);

enum class DistanceMethod { exhaustive, sampled };

const char* to_string(DistanceMethod method);

struct DistanceResult {
  int d = 0;
  DistanceMethod method = DistanceMethod::exhaustive;
  std::uint64_t samples_used = 0;  // messages evaluated
  std::uint64_t rng_seed = 0;
};

inline constexpr double kDefaultBudget = 1e9;

/// Budget from DICKSON_BUDGET if set and positive, otherwise `fallback`.
double budget_from_env(double fallback = kDefaultBudget);

/// Exact minimum over all nonzero messages, one representative per unit orbit.
/// Throws BudgetExceeded when p^{2 rank} > budget. workers = 0 picks the
/// hardware concurrency. The result does not depend on the worker count.
DistanceResult min_distance_exhaustive(const CyclicCodeSpec& code, unsigned workers = 0,
                                       double budget = kDefaultBudget);

/// Minimum over `samples` uniform nonzero messages: an upper bound on d.
/// Enumerates instead when the sample count covers the message space.
DistanceResult min_distance_sampled(const CyclicCodeSpec& code, std::uint64_t samples,
                                    std::uint64_t rng_seed, unsigned workers = 0);

/// Largest d with sum_{i<K} ceil(d / q^i) <= N.
int griesmer_max_d(std::uint64_t N, int K, std::uint64_t q);

enum class PairState { included, excluded, split };

struct PairStatus {
  int first = 0;   // factor positions in f.factors()
  int second = 0;
  PairState state = PairState::excluded;
};

struct PairingReport {
  std::vector<PairStatus> pairs;
  bool minus_one = false;  // x - 1 in the subset
  bool plus_one = false;   // x + 1 in the subset
  bool intact() const;     // no pair is split
};

/// Conjugate pairs are quadratics whose middle coefficients sum to 0.
PairingReport classify_pairing(std::uint32_t subset, const Factorization& f);

struct CodeRow {
  std::uint64_t p = 0;
  int rank = 0;
  std::uint32_t subset = 0;
  bool intact = true;
  DistanceResult distance;
  int griesmer_2k = 0;
  int griesmer_k = 0;
};

struct SymmetryReport {
  std::vector<CodeRow> rows;
  int intact_max_d = -1;  // over rank-4 rows; -1 when none
  int broken_min_d = -1;
  bool dichotomy_holds() const;
};

/// Every subset omitting exactly two factors, measured exhaustively.
SymmetryReport symmetry_experiment(const Factorization& f, unsigned workers = 0,
                                   double budget = kDefaultBudget);

struct SearchOptions {
  int rank_min = 1;
  int rank_max = 1;
  std::uint64_t samples = 1000000;
  std::uint64_t rng_seed = 7;
  unsigned workers = 0;
  double budget = kDefaultBudget;
};

/// Best subset per rank: exact when within budget, sampled otherwise.
/// Ties keep the smallest bitmask. Ranks without any subset are skipped.
std::vector<CodeRow> search_codes(const Factorization& f, const SearchOptions& options);

/// "p,rank,log_size,subset_bitmask,pairing_class,d,method,samples,griesmer_2k,griesmer_k"
void write_codes_csv(std::ostream& out, std::span<const CodeRow> rows);

}  // namespace dickson
