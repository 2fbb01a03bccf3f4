#include <gtest/gtest.h>

#include <random>

#include "dickson/dickson_poly.hpp"
#include "oracles.hpp"

using namespace dickson;

TEST(DicksonEval, MatchesRecurrence) {
  std::mt19937_64 rng(21);
  for (const auto& [p, e] : std::vector<std::pair<std::uint64_t, int>>{{13, 2}, {7, 30}, {1009, 3}}) {
    const Modulus mod(p, e);
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(p);
    for (int t = 0; t < 40; ++t) {
      const mpz_class x = gen.get_z_range(mod.value()), g = gen.get_z_range(mod.value());
      const unsigned n = static_cast<unsigned>(rng() % 200);
      const RingElem got = dickson_eval({n, RingElem(mod, x), RingElem(mod, g)});
      EXPECT_EQ(got.value(), oracle::dickson(n, x, g, mod.value())) << "n=" << n;
    }
  }
}

TEST(DicksonEval, SmallCases) {
  const Modulus mod(13, 1);
  const RingElem x(mod, 4L), g(mod, 3L);
  EXPECT_EQ(dickson_eval({0, x, g}).value(), 2);
  EXPECT_EQ(dickson_eval({1, x, g}).value(), 4);
  EXPECT_EQ(dickson_eval({2, x, g}).value(), (16 - 6) % 13);
}

// D_n(x1 + x2, x1 x2) = x1^n + x2^n.
TEST(DicksonEval, WaringPowerSums) {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 2000; ++t) {
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 101, 1009, 65521};
    const std::uint64_t p = primes[rng() % 8];
    const Modulus mod(p, 1 + static_cast<int>(rng() % 6));
    const RingElem x1(mod, static_cast<long>(rng() % 1000000));
    const RingElem x2(mod, static_cast<long>(rng() % 1000000));
    const std::uint64_t n = rng() % 201;
    EXPECT_EQ(dickson_eval({n, x1 + x2, x1 * x2}), x1.pow(n) + x2.pow(n));
  }
}

TEST(DicksonChain, FollowsRecurrenceAndMatchesEval) {
  const Modulus mod(19, 3);
  const RingElem a1(mod, 120L);
  const auto chain = dickson_chain(a1, 12);
  ASSERT_EQ(chain.size(), 12u);
  EXPECT_EQ(chain[0], a1);
  EXPECT_EQ(chain[1], a1 * a1 - RingElem(mod, 2L));
  for (std::size_t i = 2; i < chain.size(); ++i) {
    EXPECT_EQ(chain[i], a1 * chain[i - 1] - chain[i - 2]);
  }
  for (std::uint64_t i = 1; i <= 12; ++i) {
    EXPECT_EQ(chain[i - 1], dickson_eval({i, a1, RingElem(mod, 1L)}));
  }
}

TEST(DicksonChain, WordVariantAgrees) {
  const auto words = dickson_chain(5, 6, 13);
  const auto ring = dickson_chain(RingElem(Modulus(13, 1), 5L), 6);
  ASSERT_EQ(words.size(), ring.size());
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(ring[i].value(), words[i]);
  EXPECT_EQ(words[0], 5u);
  EXPECT_EQ(words[1], 10u);
  EXPECT_EQ(words[2], 6u);
}
