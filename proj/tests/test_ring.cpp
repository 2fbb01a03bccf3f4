#include <gtest/gtest.h>

#include <random>

#include "dickson/errors.hpp"
#include "dickson/ring.hpp"
#include "oracles.hpp"

using namespace dickson;

TEST(Modulus, RejectsNonPrimes) {
  for (std::uint64_t p : {0ULL, 1ULL, 2ULL, 4ULL, 9ULL, 91ULL}) {
    try {
      Modulus m(p, 2);
      FAIL() << "accepted p = " << p;
    } catch (const InvalidArgument& ex) {
      EXPECT_STREQ(ex.what(), "p must be an odd prime");
    }
  }
  EXPECT_THROW(Modulus(13, 0), InvalidArgument);
}

TEST(Modulus, PowersAndWordPath) {
  const Modulus m(13, 2);
  EXPECT_EQ(m.value(), 169);
  EXPECT_EQ(m.power(1), 13);
  EXPECT_TRUE(m.fits_word());
  EXPECT_EQ(m.word(), 169u);
  const Modulus big(1009, 10);
  EXPECT_FALSE(big.fits_word());
  EXPECT_EQ(big.with_exponent(2).value(), 1009 * 1009);
}

TEST(Primes, MillerRabinAgreesWithTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), slow(n)) << n;
  EXPECT_TRUE(is_prime(2305843009213693951ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Inverse, MatchesExtendedEuclid) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t m = 3 + rng() % 1000000007ULL;
    const std::uint64_t a = rng() % m;
    const std::int64_t expected = oracle::inverse(static_cast<std::int64_t>(a),
                                                  static_cast<std::int64_t>(m));
    if (expected == 0) {
      EXPECT_ANY_THROW(inv_mod(a, m));
    } else {
      EXPECT_EQ(inv_mod(a, m), static_cast<std::uint64_t>(expected));
    }
  }
}

TEST(RingElem, ArithmeticMatchesIntegersModM) {
  for (const auto& [p, e] : std::vector<std::pair<std::uint64_t, int>>{{13, 2}, {1009, 10}, {3, 40}}) {
    const Modulus mod(p, e);
    const mpz_class m = mod.value();
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(p));
    for (int t = 0; t < 300; ++t) {
      const mpz_class a = gen.get_z_range(m), b = gen.get_z_range(m);
      const RingElem x(mod, a), y(mod, b);
      EXPECT_EQ((x + y).value(), oracle::mod(a + b, m));
      EXPECT_EQ((x - y).value(), oracle::mod(a - b, m));
      EXPECT_EQ((x * y).value(), oracle::mod(a * b, m));
      EXPECT_EQ((-x).value(), oracle::mod(-a, m));
    }
  }
}

TEST(RingElem, ClassificationAndValuation) {
  const Modulus mod(13, 2);
  EXPECT_EQ(RingElem(mod, 0L).classify(), ElementClass::zero);
  EXPECT_EQ(RingElem(mod, 26L).classify(), ElementClass::zero_divisor);
  EXPECT_EQ(RingElem(mod, 5L).classify(), ElementClass::unit);
  EXPECT_EQ(p_valuation(RingElem(mod, 0L)), 2);
  EXPECT_EQ(p_valuation(RingElem(mod, 39L)), 1);
  EXPECT_EQ(p_valuation(RingElem(mod, 40L)), 0);
  EXPECT_EQ(RingElem(mod, -1L).value(), 168);
  EXPECT_THROW(mod_inv(RingElem(mod, 13L)), NotAUnit);
  EXPECT_EQ((mod_inv(RingElem(mod, 5L)) * RingElem(mod, 5L)).value(), 1);
}

TEST(RingElem, MixedModuliRejected) {
  EXPECT_THROW(RingElem(Modulus(13, 2), 1L) + RingElem(Modulus(13, 3), 1L), ModulusMismatch);
}

TEST(RingPoly, ProductMatchesSchoolbook) {
  std::mt19937_64 rng(3);
  for (const auto& [p, e] : std::vector<std::pair<std::uint64_t, int>>{{13, 2}, {101, 12}}) {
    const Modulus mod(p, e);
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(7);
    for (int t = 0; t < 50; ++t) {
      std::vector<mpz_class> a(1 + rng() % 20), b(1 + rng() % 20);
      for (auto& c : a) c = gen.get_z_range(mod.value());
      for (auto& c : b) c = gen.get_z_range(mod.value());
      const RingPoly f(mod, a), g(mod, b);
      const auto expected = oracle::poly_mul(a, b, mod.value());
      EXPECT_EQ((f * g).coeffs(), expected);
      EXPECT_EQ(poly_mul_mod(f, g).coeffs(), expected);
    }
  }
}

TEST(RingPoly, DivisionReconstructs) {
  const Modulus mod(7, 3);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    std::vector<mpz_class> a(1 + rng() % 15), b(1 + rng() % 6);
    for (auto& c : a) c = static_cast<unsigned long>(rng() % 343);
    for (auto& c : b) c = static_cast<unsigned long>(rng() % 343);
    b.back() = 1;
    const RingPoly f(mod, a), g(mod, b);
    const auto [q, r] = poly_divrem(f, g);
    EXPECT_LT(r.degree(), g.degree());
    EXPECT_EQ(q * g + r, f);
    EXPECT_EQ(poly_mul_mod(f, g, g).coeffs(), poly_divrem(f * g, g).second.coeffs());
  }
}

TEST(RingPoly, SelfReciprocity) {
  const Modulus mod(13, 2);
  EXPECT_TRUE(RingPoly(mod, {-1, 1}).is_self_reciprocal());
  EXPECT_TRUE(RingPoly(mod, {1, 1}).is_self_reciprocal());
  EXPECT_TRUE(RingPoly(mod, {1, 34, 1}).is_self_reciprocal());
  EXPECT_FALSE(RingPoly(mod, {3, 2, 1}).is_self_reciprocal());
  EXPECT_FALSE(RingPoly(mod, {13, 1}).is_self_reciprocal());
}

TEST(RingPoly, XPowMinusOneAndFormatting) {
  const Modulus mod(13, 2);
  const RingPoly f = RingPoly::x_pow_minus_one(mod, 14);
  EXPECT_EQ(f.degree(), 14);
  EXPECT_EQ(f.coeff(0).value(), 168);
  EXPECT_EQ(to_string(RingPoly(mod, {1, 34, 1})), "x^2 + 34*x + 1");
  EXPECT_EQ(poly_eval(RingPoly(mod, {1, 34, 1}), RingElem(mod, 2L)).value(), 73);
  EXPECT_EQ(RingPoly(mod, {5, 0, 0}).degree(), 0);
  EXPECT_TRUE(RingPoly(mod, {169}).is_zero());
}

TEST(RingPoly, ReductionToSmallerExponent) {
  const Modulus big(13, 3), small(13, 1);
  const RingPoly f(big, {2000, 170, 1});
  EXPECT_EQ(f.reduced_to(small), RingPoly(small, {2000 % 13, 170 % 13, 1}));
}
