#pragma once

// Structural lifting: the integer polynomial V(x) of degree floor(p/4) whose
// roots mod p^h are S_i = 2 - A_i^2, and the scalar Hensel loop on those roots.

#include <cstdint>
#include <vector>

#include "dickson/ring.hpp"
#include "dickson/seedgen.hpp"

namespace dickson {

/// V(x) = sum_r V_r x^{kv - r}, with V_0 = 1.
struct StructuralPoly {
  std::uint64_t p = 0;
  int kv = 0;
  std::vector<BigInt> coeffs;  // V_0 .. V_kv, leading coefficient first

  /// Exact value over Z.
  BigInt eval(const BigInt& x) const;
  /// V'(x) over Z.
  BigInt eval_derivative(const BigInt& x) const;
  /// V as a ring polynomial (ascending coefficients).
  RingPoly to_ring_poly(const Modulus& mod) const;
};

/// Binomial construction, split on p mod 4:
///   p = 4k+3: V_{2i} = (-1)^i C(k-i, i),  V_{2i+1} = 0
///   p = 4k+1: V_{2i} = (-1)^i C(k-i, i),  V_{2i+1} = (-1)^{i+1} C(k-i-1, i)
StructuralPoly build_v(std::uint64_t p);

/// One root of V being lifted. Invariant: V(s) = 0 mod p^level.
struct LiftState {
  int index = 0;               // base-layer slot i
  std::uint64_t a_base = 0;    // A_i mod p
  BigInt s;                    // S_i^(level), canonical mod p^level
  int level = 1;
  std::uint64_t c_update = 0;  // -V'(S_i^(1))^{-1} mod p
};

/// Level-1 state for slot `index`. Throws SingularSeed if V'(S) = 0 mod p.
LiftState init_seed(const StructuralPoly& v, int index, std::uint64_t a_base);

/// One state per slot i = 1 .. kv.
std::vector<LiftState> init_seeds(const BaseLayer& base, const StructuralPoly& v);

/// Reference lifting step using the exact integer V(s). Throws
/// IntegralityViolation when p^level does not divide V(s).
LiftState lift_step(const LiftState& state, const StructuralPoly& v);

/// Lifting against a fixed target ring. V is reduced once mod p^e and each
/// step evaluates V(s) mod p^{h+1}, which already determines the correction
/// digit exactly.
class Lifter {
 public:
  Lifter(const StructuralPoly& v, Modulus target);

  const Modulus& target() const noexcept { return target_; }
  const StructuralPoly& structural() const noexcept { return v_; }

  LiftState seed(int index, std::uint64_t a_base) const { return init_seed(v_, index, a_base); }

  /// level h -> h + 1. Requires h < e.
  LiftState step(const LiftState& state) const;

  /// Steps until state.level == level.
  LiftState lift_to(LiftState state, int level) const;

 private:
  StructuralPoly v_;
  Modulus target_;
  std::vector<BigInt> reduced_;  // V_r mod p^e
};

/// The unique A with A^2 = 2 - s_final (mod p^e) and A = a_base (mod p), by
/// Newton iteration with doubling precision. Throws NonResidue when
/// a_base^2 != 2 - s_final (mod p) or a_base = 0 (mod p).
RingElem recover_a(const BigInt& s_final, std::uint64_t a_base, const Modulus& target);

}  // namespace dickson
