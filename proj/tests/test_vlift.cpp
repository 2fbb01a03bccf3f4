#include <gtest/gtest.h>

#include <random>

#include "dickson/errors.hpp"
#include "dickson/seedgen.hpp"
#include "dickson/vlift.hpp"

using namespace dickson;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

TEST(BuildV, KnownPolynomials) {
  EXPECT_EQ(build_v(5).coeffs, big({1, -1}));
  EXPECT_EQ(build_v(7).coeffs, big({1, 0}));
  EXPECT_EQ(build_v(13).coeffs, big({1, -1, -2, 1}));
  EXPECT_EQ(build_v(17).coeffs, big({1, -1, -3, 2, 1}));
  EXPECT_EQ(build_v(19).coeffs, big({1, 0, -3, 0, 1}));
  EXPECT_EQ(build_v(29).coeffs, big({1, -1, -6, 5, 10, -6, -4, 1}));
  EXPECT_EQ(build_v(3).coeffs, big({1}));
  EXPECT_THROW(build_v(21), InvalidArgument);
}

TEST(BuildV, ValuesAtThirteenSeeds) {
  const StructuralPoly v = build_v(13);
  EXPECT_EQ(v.eval(3), 13);
  EXPECT_EQ(v.eval(6), 169);
  EXPECT_EQ(v.eval(5), 91);
  EXPECT_EQ(v.eval_derivative(3), 3 * 9 - 2 * 3 - 2);
}

// sum_{i<=j} (-1)^i C(k-2i, j-i) C(k-i, i) = 1.
TEST(LemmaIdentity, HoldsForSmallK) {
  for (unsigned long k = 1; k <= 120; ++k) {
    for (unsigned long j = 0; j <= k / 2; ++j) {
      BigInt sum = 0;
      for (unsigned long i = 0; i <= j; ++i) {
        BigInt term = binom(k - 2 * i, j - i) * binom(k - i, i);
        if (i % 2 == 1) term = -term;
        sum += term;
      }
      ASSERT_EQ(sum, 1) << "k=" << k << " j=" << j;
    }
  }
}

TEST(Seeds, ThirteenSeedsAndUpdateFactor) {
  const BaseLayer base = base_layer(13, first_primitive_quadratic(13));
  const auto states = init_seeds(base, build_v(13));
  ASSERT_EQ(states.size(), 3u);
  EXPECT_EQ(states[0].s, 3);
  EXPECT_EQ(states[1].s, 6);
  EXPECT_EQ(states[2].s, 5);
  EXPECT_EQ(states[0].c_update, 2u);
}

TEST(Seeds, NineteenUpdateFactor) {
  const LiftState s = init_seed(build_v(19), 1, 6);
  EXPECT_EQ(s.s, 4);
  EXPECT_EQ(s.c_update, 14u);
}

TEST(Seeds, NonRootRejected) {
  // 2 - 1^2 = 1 is not a root of x^3 - x^2 - 2x + 1 mod 13.
  EXPECT_THROW(init_seed(build_v(13), 1, 1), IntegralityViolation);
}

TEST(LiftStep, WorkedExamples) {
  const StructuralPoly v13 = build_v(13);
  EXPECT_EQ(lift_step(init_seed(v13, 1, 5), v13).s, 29);
  EXPECT_EQ(lift_step(init_seed(v13, 2, 10), v13).s, 6);

  const StructuralPoly v19 = build_v(19);
  LiftState s = init_seed(v19, 1, 6);
  s = lift_step(s, v19);
  EXPECT_EQ(s.s, 42);
  EXPECT_EQ(v19.eval(42), 3106405);
  s = lift_step(s, v19);
  EXPECT_EQ(s.s, 3652);
  EXPECT_EQ(s.level, 3);
}

TEST(LiftStep, LevelMismatchDetected) {
  const StructuralPoly v = build_v(13);
  LiftState s = init_seed(v, 1, 5);
  s.level = 3;  // claims more precision than it has
  EXPECT_THROW(lift_step(s, v), IntegralityViolation);
}

// V(S^(h)) = 0 mod p^h at every level, and the modular lifter reproduces the
// exact-integer reference step.
TEST(Lifter, RootInvariantAndReferenceAgreement) {
  for (std::uint64_t p = 5; p < 200; p += 2) {
    if (!is_prime(p)) continue;
    const int e = 6;
    const BaseLayer base = base_layer(p, first_primitive_quadratic(p));
    const StructuralPoly v = build_v(p);
    const Lifter lifter(v, Modulus(p, e));
    for (LiftState exact : init_seeds(base, v)) {
      LiftState fast = exact;
      for (int h = 1; h < e; ++h) {
        exact = lift_step(exact, v);
        fast = lifter.step(fast);
        ASSERT_EQ(exact.s, fast.s) << "p=" << p << " h=" << h;
        BigInt ph;
        mpz_ui_pow_ui(ph.get_mpz_t(), p, static_cast<unsigned long>(h + 1));
        ASSERT_TRUE(mpz_divisible_p(v.eval(exact.s).get_mpz_t(), ph.get_mpz_t()) != 0);
      }
    }
  }
}

TEST(Lifter, BigintPathMatchesReference) {
  const std::uint64_t p = 1009;
  const StructuralPoly v = build_v(p);
  const BaseLayer base = base_layer(p, first_primitive_quadratic(p));
  const Lifter lifter(v, Modulus(p, 12));
  LiftState exact = init_seed(v, 1, base.chain[0]);
  LiftState fast = exact;
  for (int h = 1; h < 12; ++h) {
    exact = lift_step(exact, v);
    fast = lifter.step(fast);
    ASSERT_EQ(exact.s, fast.s) << h;
  }
  EXPECT_THROW(lifter.step(fast), InvalidArgument);
}

TEST(RecoverA, WorkedExamples) {
  EXPECT_EQ(recover_a(29, 5, Modulus(13, 2)).value(), 135);
  EXPECT_EQ(recover_a(42, 6, Modulus(19, 2)).value(), 120);
  EXPECT_EQ(recover_a(3652, 6, Modulus(19, 3)).value(), 6618);
  EXPECT_THROW(recover_a(29, 4, Modulus(13, 2)), NonResidue);
  EXPECT_THROW(recover_a(2, 0, Modulus(13, 2)), NonResidue);
}

TEST(RecoverA, RoundTripFromSquares) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    static const std::uint64_t primes[] = {3, 5, 13, 19, 1009};
    const std::uint64_t p = primes[rng() % 5];
    const Modulus mod(p, 1 + static_cast<int>(rng() % 5));
    RingElem a(mod, static_cast<long>(rng() % 100000000));
    if (!a.is_unit()) a += RingElem(mod, 1L);
    if (!a.is_unit()) continue;
    const RingElem s = RingElem(mod, 2L) - a * a;
    const std::uint64_t base = mpz_fdiv_ui(a.value().get_mpz_t(), p);
    EXPECT_EQ(recover_a(s.value(), base, mod), a);
  }
}
