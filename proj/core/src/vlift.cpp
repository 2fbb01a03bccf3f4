#include "dickson/vlift.hpp"

#include <string>

#include "dickson/errors.hpp"

namespace dickson {

namespace {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::uint64_t eval_mod_p(const std::vector<BigInt>& coeffs, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (const BigInt& c : coeffs) {
    const std::uint64_t cm = mpz_fdiv_ui(c.get_mpz_t(), p);
    acc = (mul_mod(acc, x, p) + cm) % p;
  }
  return acc;
}

std::uint64_t derivative_mod_p(const std::vector<BigInt>& coeffs, std::uint64_t x,
                               std::uint64_t p) {
  const std::size_t deg = coeffs.size() - 1;
  std::uint64_t acc = 0;
  for (std::size_t r = 0; r < deg; ++r) {
    const std::uint64_t power = deg - r;
    const std::uint64_t cm = mul_mod(mpz_fdiv_ui(coeffs[r].get_mpz_t(), p), power % p, p);
    acc = (mul_mod(acc, x, p) + cm) % p;
  }
  return acc;
}

BigInt next_s(const LiftState& state, std::uint64_t delta, std::uint64_t p, const BigInt& ph) {
  const std::uint64_t digit = mul_mod(state.c_update, delta % p, p);
  BigInt s = ph;
  s *= static_cast<unsigned long>(digit);
  s += state.s;
  return s;
}

}  // namespace

BigInt StructuralPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (const BigInt& c : coeffs) {
    acc *= x;
    acc += c;
  }
  return acc;
}

BigInt StructuralPoly::eval_derivative(const BigInt& x) const {
  BigInt acc = 0;
  const std::size_t deg = coeffs.size() - 1;
  for (std::size_t r = 0; r < deg; ++r) {
    acc *= x;
    acc += coeffs[r] * static_cast<unsigned long>(deg - r);
  }
  return acc;
}

RingPoly StructuralPoly::to_ring_poly(const Modulus& mod) const {
  return RingPoly(mod, std::vector<BigInt>(coeffs.rbegin(), coeffs.rend()));
}

StructuralPoly build_v(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  StructuralPoly v;
  v.p = p;
  const long k = static_cast<long>(p / 4);
  v.kv = static_cast<int>(k);
  v.coeffs.resize(static_cast<std::size_t>(k) + 1);
  const bool one_mod_four = p % 4 == 1;
  for (long r = 0; r <= k; ++r) {
    const long i = r / 2;
    BigInt c;
    if (r % 2 == 0) {
      c = binomial(k - i, i);
      if (i % 2 == 1) c = -c;
    } else if (one_mod_four) {
      c = binomial(k - i - 1, i);
      if ((i + 1) % 2 == 1) c = -c;
    }
    v.coeffs[static_cast<std::size_t>(r)] = std::move(c);
  }
  return v;
}

LiftState init_seed(const StructuralPoly& v, int index, std::uint64_t a_base) {
  const std::uint64_t p = v.p;
  a_base %= p;
  const std::uint64_t s = (2 + p - mul_mod(a_base, a_base, p)) % p;

  LiftState state;
  state.index = index;
  state.a_base = a_base;
  state.s = static_cast<unsigned long>(s);
  state.level = 1;
  if (v.kv == 0) return state;  // V is the constant 1; nothing to lift

  if (eval_mod_p(v.coeffs, s, p) != 0) {
    throw IntegralityViolation("seed S_" + std::to_string(index) + " = " + std::to_string(s) +
                               " is not a root of V mod p");
  }
  const std::uint64_t d = derivative_mod_p(v.coeffs, s, p);
  if (d == 0) {
    throw SingularSeed("V'(S_" + std::to_string(index) + ") = 0 mod p");
  }
  state.c_update = (p - inv_mod(d, p)) % p;
  return state;
}

std::vector<LiftState> init_seeds(const BaseLayer& base, const StructuralPoly& v) {
  if (base.p != v.p) throw InvalidArgument("base layer and V disagree on p");
  std::vector<LiftState> out;
  out.reserve(static_cast<std::size_t>(v.kv));
  for (int i = 1; i <= v.kv; ++i) {
    out.push_back(init_seed(v, i, base.chain[static_cast<std::size_t>(i) - 1]));
  }
  return out;
}

LiftState lift_step(const LiftState& state, const StructuralPoly& v) {
  const std::uint64_t p = v.p;
  BigInt ph;
  mpz_ui_pow_ui(ph.get_mpz_t(), p, static_cast<unsigned long>(state.level));

  const BigInt value = v.eval(state.s);
  if (p_valuation(value, p, state.level) < state.level) {
    throw IntegralityViolation("p^h does not divide V(S) at level " +
                               std::to_string(state.level));
  }
  BigInt delta;
  mpz_divexact(delta.get_mpz_t(), value.get_mpz_t(), ph.get_mpz_t());
  const std::uint64_t delta_mod = mpz_fdiv_ui(delta.get_mpz_t(), p);

  LiftState next = state;
  next.s = next_s(state, delta_mod, p, ph);
  next.level = state.level + 1;
  return next;
}

Lifter::Lifter(const StructuralPoly& v, Modulus target) : v_(v), target_(std::move(target)) {
  if (v_.p != target_.p()) throw InvalidArgument("V and target ring disagree on p");
  reduced_.reserve(v_.coeffs.size());
  for (const BigInt& c : v_.coeffs) {
    BigInt r = c;
    target_.reduce(r);
    reduced_.push_back(std::move(r));
  }
}

LiftState Lifter::step(const LiftState& state) const {
  const int h = state.level;
  if (h >= target_.e()) throw InvalidArgument("state already at target precision");
  const std::uint64_t p = target_.p();
  const BigInt& ph = target_.power(h);
  const BigInt& next_modulus = target_.power(h + 1);

  std::uint64_t delta = 0;
  if (mpz_sizeinbase(next_modulus.get_mpz_t(), 2) <= 63) {
    const std::uint64_t m = next_modulus.get_ui();
    const std::uint64_t x = state.s.get_ui();
    std::uint64_t acc = 0;
    for (const BigInt& c : reduced_) {
      const std::uint64_t cm = mpz_fdiv_ui(c.get_mpz_t(), m);
      acc = mul_mod(acc, x, m) + cm;
      if (acc >= m) acc -= m;
    }
    const std::uint64_t phw = ph.get_ui();
    if (acc % phw != 0) {
      throw IntegralityViolation("p^h does not divide V(S) at level " + std::to_string(h));
    }
    delta = acc / phw;
  } else {
    BigInt acc = 0;
    for (const BigInt& c : reduced_) {
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), state.s.get_mpz_t());
      mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), c.get_mpz_t());
      mpz_tdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), next_modulus.get_mpz_t());
    }
    if (mpz_divisible_p(acc.get_mpz_t(), ph.get_mpz_t()) == 0) {
      throw IntegralityViolation("p^h does not divide V(S) at level " + std::to_string(h));
    }
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), ph.get_mpz_t());
    delta = acc.get_ui();
  }

  LiftState next = state;
  next.s = next_s(state, delta, p, ph);
  next.level = h + 1;
  return next;
}

LiftState Lifter::lift_to(LiftState state, int level) const {
  if (level > target_.e()) throw InvalidArgument("requested level exceeds target precision");
  while (state.level < level) state = step(state);
  return state;
}

RingElem recover_a(const BigInt& s_final, std::uint64_t a_base, const Modulus& target) {
  const std::uint64_t p = target.p();
  a_base %= p;
  BigInt t = 2 - s_final;
  target.reduce(t);
  const std::uint64_t t_mod_p = mpz_fdiv_ui(t.get_mpz_t(), p);
  if (a_base == 0 || mul_mod(a_base, a_base, p) != t_mod_p) {
    throw NonResidue("no square root of 2 - S above the given base coefficient");
  }

  BigInt y = static_cast<unsigned long>(a_base);
  BigInt residual, inv, two_y;
  int precision = 1;
  while (precision < target.e()) {
    precision = std::min(2 * precision, target.e());
    const BigInt& m = target.power(precision);
    // y <- y - (y^2 - t) / (2y)  mod p^precision
    residual = y * y - t;
    two_y = 2 * y;
    mpz_invert(inv.get_mpz_t(), two_y.get_mpz_t(), m.get_mpz_t());
    y -= residual * inv;
    mpz_fdiv_r(y.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
  }
  return RingElem(target, std::move(y));
}

}  // namespace dickson
