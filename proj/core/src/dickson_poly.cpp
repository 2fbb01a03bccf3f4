#include "dickson/dickson_poly.hpp"

#include <bit>

#include "dickson/errors.hpp"

namespace dickson {

RingElem dickson_eval(const DicksonArgs& args) {
  const Modulus& mod = args.x.modulus();
  if (!(args.gamma.modulus() == mod)) throw ModulusMismatch();

  const RingElem two(mod, 2L);
  // Invariant: lo = D_k, hi = D_{k+1}, gk = gamma^k for the prefix k of n's bits.
  RingElem lo = two;
  RingElem hi = args.x;
  RingElem gk(mod, 1L);
  const int bits = args.n == 0 ? 0 : std::bit_width(args.n);
  for (int b = bits - 1; b >= 0; --b) {
    const RingElem cross = lo * hi - gk * args.x;  // D_{2k+1}
    if ((args.n >> b) & 1U) {
      hi = hi * hi - two * gk * args.gamma;  // D_{2k+2}
      lo = cross;
      gk = gk * gk * args.gamma;
    } else {
      lo = lo * lo - two * gk;  // D_{2k}
      hi = cross;
      gk = gk * gk;
    }
  }
  return lo;
}

std::vector<RingElem> dickson_chain(const RingElem& a1, std::size_t count) {
  std::vector<RingElem> out;
  out.reserve(count);
  RingElem prev(a1.modulus(), 2L);
  RingElem cur = a1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    RingElem next = a1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

std::vector<std::uint64_t> dickson_chain(std::uint64_t a1, std::size_t count, std::uint64_t m) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  a1 %= m;
  std::uint64_t prev = 2 % m;
  std::uint64_t cur = a1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    const std::uint64_t t = mul_mod(a1, cur, m);
    const std::uint64_t next = t >= prev ? t - prev : t + (m - prev);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace dickson
