#pragma once

// End-to-end factorization of x^{p+1} - 1 over Z/p^e.
//
//   x^{p+1} - 1 = (x - 1)(x + 1) Psi(x) prod (x^2 - A x + 1)
//
// Generator mode lifts the single root S_1 of V, recovers A_1 over Z/p^e and
// derives every other coefficient by the ring recurrence A_i = A_1 A_{i-1} -
// A_{i-2}. Targeted mode lifts only the requested roots.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "dickson/ring.hpp"
#include "dickson/seedgen.hpp"

namespace dickson {

enum class FactorMode { generator, targeted };

/// x^2 - a x + 1.
struct QuadraticFactor {
  int index = 0;  // base-layer slot, 0 if unknown (e.g. read back from JSON)
  RingElem a;
};

/// Per-level values S^(h) and A^(h), h = 1 .. e, for one lifted slot.
struct LiftTrace {
  int index = 0;
  std::uint64_t a_base = 0;
  std::vector<BigInt> s_levels;
  std::vector<BigInt> a_levels;
};

struct Factorization {
  explicit Factorization(Modulus mod) : modulus(std::move(mod)) {}

  Modulus modulus;
  bool has_psi = false;
  // Emission order: slot i followed by its conjugate partner, i = 1 .. kv.
  std::vector<QuadraticFactor> quadratics;
  FactorMode mode = FactorMode::generator;
  std::vector<int> indices;  // requested slots in targeted mode
  SeedSearch search = SeedSearch::lexicographic;
  std::uint64_t seed = 0;
  PrimitiveQuadratic primitive;
  bool verified = false;
  std::vector<LiftTrace> trace;

  /// (x - 1), (x + 1), [x^2 + 1], then the quadratics in emission order.
  std::vector<RingPoly> factors() const;

  /// True when the factor degrees add up to p + 1.
  bool complete() const;

  /// The same factorization read modulo p^h, h <= e.
  Factorization reduced_to(int h) const;
};

struct FactorOptions {
  FactorMode mode = FactorMode::generator;
  std::vector<int> indices;  // targeted mode: slots in 1 .. floor(p/4)
  SeedSearch search = SeedSearch::lexicographic;
  std::uint64_t rng_seed = 0;
  std::optional<PrimitiveQuadratic> primitive;  // skips the search when set
  bool verify = true;
  bool trace = false;
};

/// Throws VerificationFailed when verification is on and the result does not
/// divide (or, if complete, multiply out to) x^{p+1} - 1.
Factorization factor(std::uint64_t p, int e, const FactorOptions& options = {});

/// Exact product check. Throws IncompleteFactorization for partial targeted
/// results.
bool verify(const Factorization& f);

/// True when the product of `factors` equals x^n - 1 in their common ring.
bool verify_product(std::span<const RingPoly> factors, std::size_t n);

/// Factor coefficient vectors in a canonical (sorted) order, for set equality.
std::vector<std::vector<BigInt>> sorted_coefficient_set(std::span<const RingPoly> factors);

/// {"p","e","mode","factors":[{"degree","coeffs"}],"verified","seed",...}.
/// Coefficients above 2^64 - 1 are written as decimal strings. A "trace"
/// array is added when the factorization carries lift traces.
nlohmann::json to_json(const Factorization& f);

/// Inverse of to_json. Throws InvalidArgument on malformed documents.
Factorization from_json(const nlohmann::json& doc);

/// Just the factor polynomials of a document, without structural checks.
std::vector<RingPoly> factor_polys_from_json(const nlohmann::json& doc);

const char* to_string(FactorMode mode);
const char* to_string(SeedSearch search);

}  // namespace dickson
