#include "dickson/seedgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dickson/dickson_poly.hpp"
#include "dickson/errors.hpp"
#include "dickson/ring.hpp"

namespace dickson {

namespace {

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c) {
  // Brent's cycle finding with batched gcds.
  auto f = [&](std::uint64_t x) {
    const std::uint64_t y = mul_mod(x, x, n) + c;
    return y >= n ? y - n : y;
  };
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  const std::uint64_t batch = 128;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    const std::uint64_t d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

// a + b*x in F_p[x]/(x^2 - t*x + nrm).
struct QuadElem {
  std::uint64_t a;
  std::uint64_t b;
};

QuadElem quad_mul(QuadElem u, QuadElem v, std::uint64_t t, std::uint64_t nrm, std::uint64_t p) {
  const std::uint64_t c0 = mul_mod(u.a, v.a, p);
  const std::uint64_t c1 = (mul_mod(u.a, v.b, p) + mul_mod(u.b, v.a, p)) % p;
  const std::uint64_t c2 = mul_mod(u.b, v.b, p);
  // x^2 = t*x - nrm
  return {(c0 + p - mul_mod(c2, nrm, p)) % p, (c1 + mul_mod(c2, t, p)) % p};
}

QuadElem quad_pow(QuadElem base, std::uint64_t e, std::uint64_t t, std::uint64_t nrm,
                  std::uint64_t p) {
  QuadElem r{1, 0};
  while (e != 0) {
    if (e & 1) r = quad_mul(r, base, t, nrm, p);
    base = quad_mul(base, base, t, nrm, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> distinct_order_primes(std::uint64_t p) {
  auto primes = factor_integer(p * p - 1);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

bool is_primitive_with(std::uint64_t p, std::uint64_t a1, std::uint64_t a2,
                       const std::vector<std::uint64_t>& order_primes) {
  a1 %= p;
  a2 %= p;
  if (a2 == 0) return false;
  const std::uint64_t disc = (mul_mod(a1, a1, p) + p - mul_mod(4 % p, a2, p)) % p;
  if (disc == 0 || pow_mod(disc, (p - 1) / 2, p) != p - 1) return false;
  const std::uint64_t order = p * p - 1;
  for (std::uint64_t q : order_primes) {
    const QuadElem r = quad_pow({0, 1}, order / q, a1, a2, p);
    if (r.a == 1 && r.b == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("p must be an odd prime");
  }
}

}  // namespace

std::vector<std::uint64_t> factor_integer(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("factor_integer needs n >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d < 1000 && d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_primitive_quadratic(std::uint64_t p, std::uint64_t a1, std::uint64_t a2) {
  require_odd_prime(p);
  return is_primitive_with(p, a1, a2, distinct_order_primes(p));
}

PrimitiveQuadratic find_primitive_quadratic(std::uint64_t p, std::uint64_t rng_seed) {
  require_odd_prime(p);
  const auto primes = distinct_order_primes(p);
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::uint64_t> trace(0, p - 1);
  std::uniform_int_distribution<std::uint64_t> norm(1, p - 1);
  for (;;) {
    const std::uint64_t a1 = trace(rng);
    const std::uint64_t a2 = norm(rng);
    if (is_primitive_with(p, a1, a2, primes)) return {p, a1, a2};
  }
}

PrimitiveQuadratic first_primitive_quadratic(std::uint64_t p) {
  require_odd_prime(p);
  const auto primes = distinct_order_primes(p);
  for (std::uint64_t b = 0; b < p; ++b) {
    for (std::uint64_t c = 1; c < p; ++c) {
      const std::uint64_t a1 = (p - b) % p;
      if (is_primitive_with(p, a1, c, primes)) return {p, a1, c};
    }
  }
  throw InternalInconsistency("no primitive quadratic exists");  // unreachable for prime p
}

PrimitiveQuadratic find_primitive_quadratic(std::uint64_t p, SeedSearch search,
                                            std::uint64_t rng_seed) {
  return search == SeedSearch::lexicographic ? first_primitive_quadratic(p)
                                             : find_primitive_quadratic(p, rng_seed);
}

std::optional<std::uint64_t> BaseLayer::coefficient(std::size_t i) const {
  if (i == 0 || i > chain.size()) throw InvalidArgument("base-layer index out of range");
  if (has_psi && i == static_cast<std::size_t>((p + 1) / 4)) return std::nullopt;
  return chain[i - 1];
}

std::vector<std::size_t> BaseLayer::quadratic_indices() const {
  std::vector<std::size_t> out;
  out.reserve(chain.size());
  for (std::size_t i = 1; i <= chain.size(); ++i) {
    if (has_psi && i == static_cast<std::size_t>((p + 1) / 4)) continue;
    out.push_back(i);
  }
  return out;
}

BaseLayer base_layer(std::uint64_t p, const PrimitiveQuadratic& pq) {
  require_odd_prime(p);
  if (pq.p != p) throw InvalidArgument("primitive quadratic belongs to a different prime");

  const Modulus field(p, 1);
  const RingElem a1 = dickson_eval({p - 1, RingElem(field, BigInt(pq.a1)),
                                    RingElem(field, BigInt(pq.a2))});

  const std::size_t half = static_cast<std::size_t>((p + 1) / 2);
  std::vector<std::uint64_t> chain = dickson_chain(a1.value().get_ui(), half, p);

  // alpha^{(p+1)/2} = -1, so A_{(p+1)/2} = -2 and the chain is antisymmetric
  // about (p+1)/4. No A_i with i < (p+1)/2 may be +-2 (alpha^i = +-1).
  if (chain[half - 1] != p - 2) {
    throw InternalInconsistency("A_{(p+1)/2} != -2; seed is not primitive");
  }
  for (std::size_t i = 1; i < half; ++i) {
    const std::uint64_t a = chain[i - 1];
    if (a == 2 % p || a == p - 2) {
      throw InternalInconsistency("A_i = +-2 below (p+1)/2; seed is not primitive");
    }
    const std::uint64_t mirrored = chain[half - i - 1];
    if ((a + mirrored) % p != 0) {
      throw InternalInconsistency("chain symmetry A_{(p+1)/2-i} = -A_i violated");
    }
  }
  chain.resize(half - 1);

  BaseLayer layer;
  layer.p = p;
  layer.primitive = pq;
  layer.has_psi = p % 4 == 3;
  layer.kv = static_cast<int>(p / 4);
  if (layer.has_psi && chain[(p + 1) / 4 - 1] != 0) {
    throw InternalInconsistency("Psi slot (p+1)/4 is not zero");
  }
  layer.chain = std::move(chain);
  return layer;
}

}  // namespace dickson
