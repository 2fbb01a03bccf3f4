#pragma once

// Classical route to the same factorization, used both as an independent
// oracle and as the timing baseline: Cantor-Zassenhaus over F_p followed by
// coefficient-wise Hensel lifting of each factor.

#include <cstdint>
#include <vector>

#include "dickson/ring.hpp"

namespace dickson {

/// p-cyclotomic cosets modulo n; each coset sorted, cosets ordered by leader.
struct CosetPartition {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::vector<std::uint64_t>> cosets;
};

CosetPartition cyclotomic_cosets(std::uint64_t n, std::uint64_t p);

/// Monic irreducible factors of x^{p+1} - 1 over F_p, sorted by coefficients.
std::vector<RingPoly> cz_factor(std::uint64_t p, std::uint64_t rng_seed = 1);

/// Lifts a monic simple factor of x^{p+1} - 1 (mod p) to the unique monic
/// factor over Z/p^e. Works for any degree; used here with degree 1 and 2.
RingPoly hensel_lift_quadratic(const RingPoly& f_bar, int e);

/// cz_factor followed by hensel_lift_quadratic on every factor, sorted.
std::vector<RingPoly> baseline_factor(std::uint64_t p, int e, std::uint64_t rng_seed = 1);

}  // namespace dickson
