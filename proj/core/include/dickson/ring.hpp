#pragma once

// Exact arithmetic in Z/p^e and dense polynomials over it.
//
// Every residue is backed by a GMP integer. When p^e fits in 63 bits the
// multiply path drops to 128-bit machine arithmetic; otherwise it runs
// through mpz. Values are always kept canonical in [0, p^e).

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dickson {

using BigInt = mpz_class;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Modular multiply for word-sized moduli.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m for word-sized m; a must be coprime to m.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// The ring Z/p^e for an odd prime p < 2^31 and e >= 1.
///
/// Cheap to copy: the powers p^0 .. p^e are computed once and shared.
class Modulus {
 public:
  Modulus(std::uint64_t p, int e);

  std::uint64_t p() const noexcept { return state_->p; }
  int e() const noexcept { return state_->e; }
  const BigInt& value() const noexcept { return state_->powers.back(); }

  /// p^h for 0 <= h <= e.
  const BigInt& power(int h) const;

  bool fits_word() const noexcept { return state_->word != 0; }
  std::uint64_t word() const noexcept { return state_->word; }

  /// Same prime, different exponent.
  Modulus with_exponent(int h) const;

  /// Reduces x into [0, p^e) in place.
  void reduce(BigInt& x) const;

  friend bool operator==(const Modulus& a, const Modulus& b) noexcept {
    return a.state_ == b.state_ || (a.p() == b.p() && a.e() == b.e());
  }

 private:
  struct State {
    std::uint64_t p = 0;
    int e = 0;
    std::vector<BigInt> powers;
    std::uint64_t word = 0;  // p^e when it fits in 63 bits, else 0
  };
  std::shared_ptr<const State> state_;
};

enum class ElementClass { zero, unit, zero_divisor };

/// A residue in Z/p^e.
class RingElem {
 public:
  RingElem(Modulus mod, BigInt value);
  RingElem(Modulus mod, long value);

  const Modulus& modulus() const noexcept { return mod_; }
  const BigInt& value() const noexcept { return value_; }

  ElementClass classify() const;
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const { return classify() == ElementClass::unit; }

  RingElem pow(std::uint64_t exponent) const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& other);
  RingElem& operator-=(const RingElem& other);
  RingElem& operator*=(const RingElem& other);

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(RingElem a, const RingElem& b) { return a *= b; }

  friend bool operator==(const RingElem& a, const RingElem& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void check_same(const RingElem& other) const;

  Modulus mod_;
  BigInt value_;
};

/// Inverse of a unit. Throws NotAUnit when p divides a.
RingElem mod_inv(const RingElem& a);

/// Largest t <= e with p^t | a; the zero element has valuation e.
int p_valuation(const RingElem& a);

/// Largest t <= cap with p^t | x, over the integers. Zero saturates at cap.
int p_valuation(const BigInt& x, std::uint64_t p, int cap);

/// Dense polynomial over Z/p^e, ascending coefficients, trailing zeros trimmed.
class RingPoly {
 public:
  explicit RingPoly(Modulus mod);
  RingPoly(Modulus mod, std::vector<BigInt> coeffs);
  RingPoly(Modulus mod, std::initializer_list<long> coeffs);

  /// x^n - 1.
  static RingPoly x_pow_minus_one(Modulus mod, std::size_t n);

  const Modulus& modulus() const noexcept { return mod_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of x^i; zero past the degree.
  RingElem coeff(std::size_t i) const;

  bool is_monic() const;

  /// True when g(0) is a unit and g(0)^-1 x^deg g(1/x) == g.
  bool is_self_reciprocal() const;

  RingPoly operator-() const;
  RingPoly scaled(const RingElem& c) const;

  /// Coefficients reduced into a ring with the same prime and smaller exponent.
  RingPoly reduced_to(const Modulus& smaller) const;

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator-(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b);

  friend bool operator==(const RingPoly& a, const RingPoly& b) {
    return a.mod_ == b.mod_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  Modulus mod_;
  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder by a monic divisor.
std::pair<RingPoly, RingPoly> poly_divrem(const RingPoly& f, const RingPoly& monic);

/// Exact product f*g.
RingPoly poly_mul_mod(const RingPoly& f, const RingPoly& g);

/// Product f*g reduced modulo a monic polynomial.
RingPoly poly_mul_mod(const RingPoly& f, const RingPoly& g, const RingPoly& reducer);

/// Horner evaluation.
RingElem poly_eval(const RingPoly& f, const RingElem& x);

/// Human-readable form, highest degree first, e.g. "x^2 + 34*x + 1".
std::string to_string(const RingPoly& f);

}  // namespace dickson
