#pragma once

// Base-layer data over F_p: a primitive quadratic and the trace chain
// A_i = alpha^i + alpha^-i for a primitive (p+1)-th root of unity alpha.

#include <cstdint>
#include <optional>
#include <vector>

namespace dickson {

/// Prime factorization of n (2 <= n < 2^63), sorted ascending with multiplicity.
std::vector<std::uint64_t> factor_integer(std::uint64_t n);

/// f(x) = x^2 - a1 x + a2 over F_p.
struct PrimitiveQuadratic {
  std::uint64_t p = 0;
  std::uint64_t a1 = 0;  // trace of a root
  std::uint64_t a2 = 0;  // norm of a root

  friend bool operator==(const PrimitiveQuadratic&, const PrimitiveQuadratic&) = default;
};

/// How the primitive quadratic is chosen.
enum class SeedSearch {
  lexicographic,  // first primitive x^2 + b x + c in (b, c) order
  random,         // uniform candidates from a seeded generator
};

/// True when x^2 - a1 x + a2 is irreducible over F_p and its root has order p^2 - 1.
bool is_primitive_quadratic(std::uint64_t p, std::uint64_t a1, std::uint64_t a2);

/// Random search seeded by rng_seed. Deterministic for a fixed seed.
PrimitiveQuadratic find_primitive_quadratic(std::uint64_t p, std::uint64_t rng_seed);

/// First primitive x^2 + b x + c with (b, c) in lexicographic order.
PrimitiveQuadratic first_primitive_quadratic(std::uint64_t p);

PrimitiveQuadratic find_primitive_quadratic(std::uint64_t p, SeedSearch search,
                                            std::uint64_t rng_seed);

/// Factorization data for x^{p+1} - 1 over F_p.
///
/// Quadratic slots are indexed 1 .. (p-1)/2. When p = 3 (mod 4) the slot
/// (p+1)/4 carries A = 0 and is reported as absent; it becomes Psi = x^2 + 1.
struct BaseLayer {
  std::uint64_t p = 0;
  PrimitiveQuadratic primitive;
  std::vector<std::uint64_t> chain;  // chain[i-1] = A_i mod p, i = 1 .. (p-1)/2
  bool has_psi = false;
  int kv = 0;  // floor(p/4), the number of conjugate pairs

  std::size_t slot_count() const { return chain.size(); }
  std::optional<std::uint64_t> coefficient(std::size_t i) const;

  /// Index of the conjugate partner, (p+1)/2 - i.
  std::size_t partner(std::size_t i) const { return static_cast<std::size_t>((p + 1) / 2) - i; }

  /// Indices 1 .. (p-1)/2 with the Psi slot removed.
  std::vector<std::size_t> quadratic_indices() const;
};

/// Builds the base layer from a primitive quadratic. Throws
/// InternalInconsistency when the chain does not have the symmetry of a
/// primitive (p+1)-th root of unity.
BaseLayer base_layer(std::uint64_t p, const PrimitiveQuadratic& pq);

}  // namespace dickson
