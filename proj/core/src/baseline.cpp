#include "dickson/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dickson/errors.hpp"

namespace dickson {

namespace {

// Dense polynomials over F_p with word coefficients, ascending degree.
using WordPoly = std::vector<std::uint64_t>;

void trim(WordPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const WordPoly& f) { return static_cast<int>(f.size()) - 1; }

WordPoly sub(const WordPoly& a, const WordPoly& b, std::uint64_t p) {
  WordPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  trim(out);
  return out;
}

// True when `terms` products below p^2 can be summed in 64 bits unreduced.
bool lazy_ok(std::uint64_t p, std::size_t terms) {
  const unsigned __int128 bound = static_cast<unsigned __int128>(p - 1) * (p - 1) * (terms + 1);
  return bound < (static_cast<unsigned __int128>(1) << 63);
}

WordPoly mul(const WordPoly& a, const WordPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  WordPoly out(a.size() + b.size() - 1, 0);
  if (lazy_ok(p, std::min(a.size(), b.size()))) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      std::uint64_t* row = out.data() + i;
      for (std::size_t j = 0; j < b.size(); ++j) row[j] += ai * b[j];
    }
    for (auto& c : out) c %= p;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = (out[i + j] + a[i] * b[j]) % p;  // p < 2^31
      }
    }
  }
  trim(out);
  return out;
}

// Quotient and remainder; b must be nonzero.
std::pair<WordPoly, WordPoly> divrem(const WordPoly& a, const WordPoly& b, std::uint64_t p) {
  if (deg(a) < deg(b)) return {{}, a};
  const std::uint64_t inv_lead = inv_mod(b.back(), p);
  const int db = deg(b);
  WordPoly neg_b(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) neg_b[j] = (p - b[j]) % p;
  // Each slot receives at most db + 1 unreduced updates before it is read.
  const bool lazy = lazy_ok(p, b.size() + 1);
  WordPoly rem = a;
  WordPoly quo(a.size() - b.size() + 1, 0);
  for (int k = deg(a); k >= db; --k) {
    std::uint64_t& top = rem[static_cast<std::size_t>(k)];
    top %= p;
    const std::uint64_t c = top * inv_lead % p;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    std::uint64_t* base = rem.data() + (k - db);
    if (lazy) {
      for (int j = 0; j < db; ++j) base[j] += c * neg_b[static_cast<std::size_t>(j)];
    } else {
      for (int j = 0; j < db; ++j) {
        base[j] = (base[j] % p + c * neg_b[static_cast<std::size_t>(j)]) % p;
      }
    }
    top = 0;
  }
  rem.resize(static_cast<std::size_t>(db));
  for (auto& c : rem) c %= p;
  trim(rem);
  trim(quo);
  return {quo, rem};
}

WordPoly rem(const WordPoly& a, const WordPoly& b, std::uint64_t p) { return divrem(a, b, p).second; }

WordPoly make_monic(WordPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

WordPoly gcd(WordPoly a, WordPoly b, std::uint64_t p) {
  while (!b.empty()) {
    WordPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

WordPoly powmod(WordPoly base, std::uint64_t exp, const WordPoly& f, std::uint64_t p) {
  WordPoly result{1};
  base = rem(base, f, p);
  while (exp != 0) {
    if (exp & 1) result = rem(mul(result, base, p), f, p);
    exp >>= 1;
    if (exp != 0) base = rem(mul(base, base, p), f, p);
  }
  return result;
}

// Inverse of a modulo m over F_p; a and m coprime.
WordPoly inverse_mod(const WordPoly& a, const WordPoly& m, std::uint64_t p) {
  WordPoly r0 = m, r1 = rem(a, m, p);
  WordPoly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    WordPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw NonCoprimeCofactor("factor and cofactor share a root mod p");
  const std::uint64_t scale = inv_mod(r0[0], p);
  for (auto& c : t0) c = c * scale % p;
  return t0;
}

void equal_degree_split(const WordPoly& g, int d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<WordPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::uint64_t exp = 1;
  for (int i = 0; i < d; ++i) exp *= p;
  exp = (exp - 1) / 2;
  for (;;) {
    WordPoly r(static_cast<std::size_t>(deg(g)));
    for (auto& c : r) c = coeff(rng);
    trim(r);
    if (deg(r) < 1) continue;
    WordPoly w = sub(powmod(r, exp, g, p), WordPoly{1}, p);
    WordPoly u = gcd(g, w, p);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      equal_degree_split(u, d, p, rng, out);
      equal_degree_split(divrem(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

WordPoly x_pow_minus_one(std::uint64_t n, std::uint64_t p) {
  WordPoly f(n + 1, 0);
  f[0] = p - 1;
  f[n] = 1;
  return f;
}

WordPoly to_word(const RingPoly& f) {
  WordPoly out;
  out.reserve(f.coeffs().size());
  for (const BigInt& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), f.modulus().p()));
  trim(out);
  return out;
}

RingPoly to_ring(const WordPoly& f, const Modulus& mod) {
  std::vector<BigInt> c;
  c.reserve(f.size());
  for (std::uint64_t v : f) c.emplace_back(static_cast<unsigned long>(v));
  return RingPoly(mod, std::move(c));
}

void sort_polys(std::vector<RingPoly>& polys) {
  std::sort(polys.begin(), polys.end(), [](const RingPoly& a, const RingPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
}

}  // namespace

CosetPartition cyclotomic_cosets(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || std::gcd(n, p) != 1) throw InvalidArgument("cosets need gcd(n, p) = 1");
  CosetPartition part{n, p, {}};
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::uint64_t> coset;
    std::uint64_t j = i;
    do {
      seen[j] = true;
      coset.push_back(j);
      j = mul_mod(j, p % n, n);
    } while (j != i);
    std::sort(coset.begin(), coset.end());
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

std::vector<RingPoly> cz_factor(std::uint64_t p, std::uint64_t rng_seed) {
  const Modulus field(p, 1);
  std::mt19937_64 rng(rng_seed);
  WordPoly rest = x_pow_minus_one(p + 1, p);
  std::vector<WordPoly> factors;

  // Distinct-degree: x^{p^d} - x picks out the product of degree-d factors.
  const WordPoly x{0, 1};
  WordPoly frob = x;
  for (int d = 1; deg(rest) >= 2 * d; ++d) {
    frob = powmod(frob, p, rest, p);
    const WordPoly g = gcd(rest, sub(frob, x, p), p);
    if (deg(g) > 0) {
      equal_degree_split(g, d, p, rng, factors);
      rest = divrem(rest, g, p).first;
      frob = rem(frob, rest, p);
    }
  }
  if (deg(rest) > 0) factors.push_back(make_monic(rest, p));

  std::vector<RingPoly> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(to_ring(make_monic(f, p), field));
  sort_polys(out);
  return out;
}

RingPoly hensel_lift_quadratic(const RingPoly& f_bar, int e) {
  const std::uint64_t p = f_bar.modulus().p();
  if (f_bar.modulus().e() != 1) throw InvalidArgument("factor must be given over F_p");
  if (!f_bar.is_monic()) throw InvalidArgument("factor must be monic");

  const Modulus target(p, e);
  const WordPoly g_bar = to_word(f_bar);
  const WordPoly big_f = x_pow_minus_one(p + 1, p);
  auto [h_bar, r_bar] = divrem(big_f, g_bar, p);
  if (!r_bar.empty()) throw InvalidArgument("factor does not divide x^{p+1} - 1 mod p");
  // t = h^{-1} mod g, from the Bezout pair s g + t h = 1.
  const WordPoly t = inverse_mod(h_bar, g_bar, p);

  const RingPoly f_target = RingPoly::x_pow_minus_one(target, p + 1);
  RingPoly g = RingPoly(target, f_bar.coeffs());
  for (int k = 1; k < e; ++k) {
    // F mod g vanishes mod p^k; its next p-adic digit drives the correction.
    const RingPoly r = poly_divrem(f_target, g).second;
    const BigInt& pk = target.power(k);
    WordPoly delta;
    for (const BigInt& c : r.coeffs()) {
      if (mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()) == 0) {
        throw NonCoprimeCofactor("lifted factor lost divisibility");
      }
      BigInt q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
      delta.push_back(mpz_fdiv_ui(q.get_mpz_t(), p));
    }
    trim(delta);
    const WordPoly a = rem(mul(t, delta, p), g_bar, p);
    std::vector<BigInt> corr(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) corr[i] = pk * static_cast<unsigned long>(a[i]);
    g = g + RingPoly(target, std::move(corr));
  }
  return g;
}

std::vector<RingPoly> baseline_factor(std::uint64_t p, int e, std::uint64_t rng_seed) {
  std::vector<RingPoly> out;
  for (const RingPoly& f : cz_factor(p, rng_seed)) out.push_back(hensel_lift_quadratic(f, e));
  sort_polys(out);
  return out;
}

}  // namespace dickson
