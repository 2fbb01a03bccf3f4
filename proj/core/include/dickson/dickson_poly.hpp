#pragma once

// Dickson polynomials of the first kind, D_n(x, g) = x D_{n-1} - g D_{n-2},
// with D_0 = 2 and D_1 = x.

#include <cstdint>
#include <vector>

#include "dickson/ring.hpp"

namespace dickson {

struct DicksonArgs {
  std::uint64_t n;
  RingElem x;
  RingElem gamma;
};

/// D_n(x, gamma) in O(log n) ring operations via the Lucas doubling
/// identities D_2k = D_k^2 - 2 g^k and D_2k+1 = D_k D_k+1 - g^k x.
RingElem dickson_eval(const DicksonArgs& args);

/// [A_1, ..., A_count] for A_0 = 2, A_1 = a1, A_i = a1 A_{i-1} - A_{i-2},
/// i.e. A_i = D_i(a1, 1).
std::vector<RingElem> dickson_chain(const RingElem& a1, std::size_t count);

/// Word-sized variant of dickson_chain over Z/m.
std::vector<std::uint64_t> dickson_chain(std::uint64_t a1, std::size_t count, std::uint64_t m);

}  // namespace dickson
