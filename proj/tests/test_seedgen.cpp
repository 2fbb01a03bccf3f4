#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dickson/errors.hpp"
#include "dickson/ring.hpp"
#include "dickson/seedgen.hpp"
#include "oracles.hpp"

using namespace dickson;

TEST(FactorInteger, ProductOfPrimes) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t n = 2 + rng() % (1ULL << 62);
    const auto f = factor_integer(n);
    std::uint64_t prod = 1;
    for (std::uint64_t q : f) {
      EXPECT_TRUE(is_prime(q)) << q;
      prod *= q;
    }
    EXPECT_EQ(prod, n);
    EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
  }
  EXPECT_EQ(factor_integer(168), (std::vector<std::uint64_t>{2, 2, 2, 3, 7}));
}

// Primitive means the class of x has order exactly p^2 - 1.
TEST(Primitivity, MatchesBruteForceOrder) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t a1 = 0; a1 < p; ++a1) {
      for (std::uint64_t a2 = 0; a2 < p; ++a2) {
        const bool expected = a2 != 0 && oracle::order_of_x(p, a1, a2) == p * p - 1;
        EXPECT_EQ(is_primitive_quadratic(p, a1, a2), expected) << p << " " << a1 << " " << a2;
      }
    }
  }
}

TEST(Primitivity, F25HasPhi24Over2Quadratics) {
  int count = 0;
  for (std::uint64_t a1 = 0; a1 < 5; ++a1) {
    for (std::uint64_t a2 = 1; a2 < 5; ++a2) count += is_primitive_quadratic(5, a1, a2);
  }
  EXPECT_EQ(count, 4);  // phi(24) / 2
}

TEST(Search, LexicographicFirstForThirteen) {
  const auto pq = first_primitive_quadratic(13);
  EXPECT_EQ(pq.a1, 12u);  // x^2 + x + 2
  EXPECT_EQ(pq.a2, 2u);
  EXPECT_EQ(find_primitive_quadratic(13, SeedSearch::lexicographic, 99), pq);
}

TEST(Search, RandomIsDeterministicPerSeed) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = find_primitive_quadratic(1009, seed);
    EXPECT_EQ(a, find_primitive_quadratic(1009, seed));
    EXPECT_TRUE(is_primitive_quadratic(1009, a.a1, a.a2));
  }
}

TEST(Search, RejectsBadPrimes) {
  EXPECT_THROW(first_primitive_quadratic(2), InvalidArgument);
  EXPECT_THROW(first_primitive_quadratic(15), InvalidArgument);
}

TEST(BaseLayer, ThirteenChain) {
  const BaseLayer b = base_layer(13, first_primitive_quadratic(13));
  EXPECT_FALSE(b.has_psi);
  EXPECT_EQ(b.kv, 3);
  EXPECT_EQ(b.chain, (std::vector<std::uint64_t>{5, 10, 6, 7, 3, 8}));
  EXPECT_EQ(b.partner(1), 6u);
  EXPECT_EQ(b.quadratic_indices().size(), 6u);
}

TEST(BaseLayer, NineteenChainWithPsi) {
  // Any primitive quadratic whose base coefficient is 6.
  std::optional<BaseLayer> found;
  for (std::uint64_t a1 = 0; a1 < 19 && !found; ++a1) {
    for (std::uint64_t a2 = 1; a2 < 19 && !found; ++a2) {
      if (!is_primitive_quadratic(19, a1, a2)) continue;
      BaseLayer b = base_layer(19, {19, a1, a2});
      if (b.chain[0] == 6) found = b;
    }
  }
  ASSERT_TRUE(found);
  EXPECT_TRUE(found->has_psi);
  EXPECT_EQ(found->kv, 4);
  EXPECT_EQ(std::vector<std::uint64_t>(found->chain.begin(), found->chain.begin() + 4),
            (std::vector<std::uint64_t>{6, 15, 8, 14}));
  EXPECT_FALSE(found->coefficient(5).has_value());
  EXPECT_EQ(found->chain[4], 0u);
  EXPECT_EQ(found->quadratic_indices().size(), 8u);
}

// A_{(p+1)/2 - i} = -A_i and the A_i are pairwise distinct.
TEST(BaseLayer, SymmetryForManyPrimes) {
  for (std::uint64_t p = 3; p < 500; p += 2) {
    if (!is_prime(p)) continue;
    const BaseLayer b = base_layer(p, find_primitive_quadratic(p, SeedSearch::random, p));
    ASSERT_EQ(b.chain.size(), (p - 1) / 2);
    for (std::size_t i = 1; i <= b.chain.size(); ++i) {
      EXPECT_EQ((b.chain[i - 1] + b.chain[b.partner(i) - 1]) % p, 0u) << p;
    }
    std::set<std::uint64_t> distinct(b.chain.begin(), b.chain.end());
    EXPECT_EQ(distinct.size(), b.chain.size());
  }
}

TEST(BaseLayer, NonPrimitiveSeedIsRejected) {
  // x^2 + 1 over F_13 splits (13 = 1 mod 4), so it is not primitive.
  EXPECT_THROW(base_layer(13, {13, 0, 1}), InternalInconsistency);
}
