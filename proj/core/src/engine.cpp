#include "dickson/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dickson/dickson_poly.hpp"
#include "dickson/errors.hpp"
#include "dickson/vlift.hpp"

namespace dickson {

namespace {

RingPoly quadratic_poly(const Modulus& mod, const RingElem& a) {
  return RingPoly(mod, std::vector<BigInt>{BigInt(1), (-a).value(), BigInt(1)});
}

void append_pair(Factorization& f, int index, int partner, const RingElem& a) {
  f.quadratics.push_back({index, a});
  f.quadratics.push_back({partner, -a});
}

LiftTrace trace_slot(const Lifter& lifter, LiftState state) {
  const Modulus& target = lifter.target();
  LiftTrace trace;
  trace.index = state.index;
  trace.a_base = state.a_base;
  for (;;) {
    trace.s_levels.push_back(state.s);
    const Modulus level_mod = target.with_exponent(state.level);
    trace.a_levels.push_back(recover_a(state.s, state.a_base, level_mod).value());
    if (state.level == target.e()) break;
    state = lifter.step(state);
  }
  return trace;
}

// Each returned factor must divide x^{p+1} - 1; used for partial results.
bool factors_divide(const Factorization& f) {
  const RingPoly target = RingPoly::x_pow_minus_one(f.modulus, f.modulus.p() + 1);
  for (const RingPoly& g : f.factors()) {
    if (!poly_divrem(target, g).second.is_zero()) return false;
  }
  return true;
}

BigInt json_to_bigint(const nlohmann::json& v) {
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw InvalidArgument("coefficient is not a decimal integer");
    }
    return out;
  }
  throw InvalidArgument("coefficient must be an integer or decimal string");
}

nlohmann::json bigint_to_json(const BigInt& v) {
  if (mpz_fits_ulong_p(v.get_mpz_t()) != 0) return v.get_ui();
  return v.get_str();
}

}  // namespace

const char* to_string(FactorMode mode) {
  return mode == FactorMode::generator ? "generator" : "targeted";
}

const char* to_string(SeedSearch search) {
  return search == SeedSearch::lexicographic ? "lex" : "random";
}

std::vector<RingPoly> Factorization::factors() const {
  std::vector<RingPoly> out;
  out.reserve(quadratics.size() + 3);
  out.emplace_back(modulus, std::initializer_list<long>{-1, 1});
  out.emplace_back(modulus, std::initializer_list<long>{1, 1});
  if (has_psi) out.emplace_back(modulus, std::initializer_list<long>{1, 0, 1});
  for (const auto& q : quadratics) out.push_back(quadratic_poly(modulus, q.a));
  return out;
}

bool Factorization::complete() const {
  const std::uint64_t degree = 2 + (has_psi ? 2 : 0) + 2 * quadratics.size();
  return degree == modulus.p() + 1;
}

Factorization Factorization::reduced_to(int h) const {
  Factorization out = *this;
  out.modulus = modulus.with_exponent(h);
  for (auto& q : out.quadratics) q.a = RingElem(out.modulus, q.a.value());
  for (auto& t : out.trace) {
    t.s_levels.resize(static_cast<std::size_t>(h));
    t.a_levels.resize(static_cast<std::size_t>(h));
  }
  return out;
}

Factorization factor(std::uint64_t p, int e, const FactorOptions& options) {
  const Modulus target(p, e);  // validates p and e
  const PrimitiveQuadratic pq = options.primitive
                                    ? *options.primitive
                                    : find_primitive_quadratic(p, options.search, options.rng_seed);
  const BaseLayer base = base_layer(p, pq);

  Factorization f(target);
  f.has_psi = base.has_psi;
  f.mode = options.mode;
  f.search = options.search;
  f.seed = options.rng_seed;
  f.primitive = pq;
  const int kv = base.kv;
  auto partner = [&](int i) { return static_cast<int>(base.partner(static_cast<std::size_t>(i))); };

  if (options.mode == FactorMode::targeted) {
    std::vector<int> wanted = options.indices;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (int i : wanted) {
      if (i < 1 || i > kv) {
        throw InvalidArgument("targeted index " + std::to_string(i) + " outside 1.." +
                              std::to_string(kv));
      }
    }
    f.indices = wanted;
    const StructuralPoly v = build_v(p);
    const Lifter lifter(v, target);
    for (int i : wanted) {
      const std::uint64_t a_base = base.chain[static_cast<std::size_t>(i) - 1];
      LiftState state = lifter.seed(i, a_base);
      if (options.trace) f.trace.push_back(trace_slot(lifter, state));
      state = lifter.lift_to(std::move(state), e);
      append_pair(f, i, partner(i), recover_a(state.s, a_base, target));
    }
  } else if (kv > 0) {
    std::vector<RingElem> chain;
    if (e == 1) {
      chain.reserve(static_cast<std::size_t>(kv) + 1);
      for (int i = 1; i <= kv + 1; ++i) {
        chain.emplace_back(target, BigInt(base.chain[static_cast<std::size_t>(i) - 1]));
      }
    } else {
      const StructuralPoly v = build_v(p);
      const Lifter lifter(v, target);
      LiftState state = lifter.seed(1, base.chain[0]);
      if (options.trace) f.trace.push_back(trace_slot(lifter, state));
      state = lifter.lift_to(std::move(state), e);
      const RingElem a1 = recover_a(state.s, base.chain[0], target);
      chain = dickson_chain(a1, static_cast<std::size_t>(kv) + 1);
    }
    // The slot after the last pair closes the chain: Psi (A = 0) when
    // p = 3 mod 4, otherwise the partner of slot kv.
    const RingElem& closing = chain[static_cast<std::size_t>(kv)];
    const bool closes = base.has_psi ? closing.is_zero()
                                     : closing == -chain[static_cast<std::size_t>(kv) - 1];
    if (!closes) throw InternalInconsistency("lifted chain lost its conjugate symmetry");
    for (int i = 1; i <= kv; ++i) append_pair(f, i, partner(i), chain[static_cast<std::size_t>(i) - 1]);
  }

  if (options.verify) {
    const bool ok = f.complete() ? verify(f) : factors_divide(f);
    if (!ok) throw VerificationFailed("factors do not reproduce x^{p+1} - 1");
    f.verified = true;
  }
  return f;
}

bool verify_product(std::span<const RingPoly> factors, std::size_t n) {
  if (factors.empty()) return false;
  const Modulus& mod = factors.front().modulus();
  RingPoly product(mod, std::initializer_list<long>{1});
  for (const RingPoly& g : factors) {
    if (!(g.modulus() == mod)) return false;
    product = poly_mul_mod(product, g);
  }
  return product == RingPoly::x_pow_minus_one(mod, n);
}

bool verify(const Factorization& f) {
  if (!f.complete()) {
    throw IncompleteFactorization("factor degrees do not add up to p + 1");
  }
  const auto polys = f.factors();
  return verify_product(polys, f.modulus.p() + 1);
}

std::vector<std::vector<BigInt>> sorted_coefficient_set(std::span<const RingPoly> factors) {
  std::vector<std::vector<BigInt>> out;
  out.reserve(factors.size());
  for (const auto& g : factors) out.push_back(g.coeffs());
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const Factorization& f) {
  nlohmann::json doc;
  doc["p"] = f.modulus.p();
  doc["e"] = f.modulus.e();
  doc["mode"] = to_string(f.mode);
  if (f.mode == FactorMode::targeted) doc["indices"] = f.indices;
  auto factors = nlohmann::json::array();
  for (const RingPoly& g : f.factors()) {
    auto coeffs = nlohmann::json::array();
    for (const BigInt& c : g.coeffs()) coeffs.push_back(bigint_to_json(c));
    factors.push_back({{"degree", g.degree()}, {"coeffs", std::move(coeffs)}});
  }
  doc["factors"] = std::move(factors);
  doc["verified"] = f.verified;
  doc["seed"] = f.seed;
  doc["search"] = to_string(f.search);
  doc["primitive"] = {f.primitive.a1, f.primitive.a2};
  if (!f.trace.empty()) {
    auto trace = nlohmann::json::array();
    for (const LiftTrace& t : f.trace) {
      auto s = nlohmann::json::array();
      auto a = nlohmann::json::array();
      for (const BigInt& v : t.s_levels) s.push_back(bigint_to_json(v));
      for (const BigInt& v : t.a_levels) a.push_back(bigint_to_json(v));
      trace.push_back({{"index", t.index}, {"a_base", t.a_base}, {"s", s}, {"a", a}});
    }
    doc["trace"] = std::move(trace);
  }
  return doc;
}

std::vector<RingPoly> factor_polys_from_json(const nlohmann::json& doc) {
  try {
    const auto p = doc.at("p").get<std::uint64_t>();
    const auto e = doc.at("e").get<int>();
    const Modulus mod(p, e);
    std::vector<RingPoly> out;
    for (const auto& item : doc.at("factors")) {
      const auto& coeffs = item.at("coeffs");
      if (!coeffs.is_array()) throw InvalidArgument("coeffs must be an array");
      std::vector<BigInt> c;
      for (const auto& v : coeffs) {
        BigInt x = json_to_bigint(v);
        if (sgn(x) < 0 || x >= mod.value()) throw InvalidArgument("coefficient out of range");
        c.push_back(std::move(x));
      }
      RingPoly g(mod, std::move(c));
      if (item.contains("degree") && item.at("degree").get<int>() != g.degree()) {
        throw InvalidArgument("declared degree does not match coefficients");
      }
      out.push_back(std::move(g));
    }
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed factorization document: ") + ex.what());
  }
}

Factorization from_json(const nlohmann::json& doc) {
  const auto polys = factor_polys_from_json(doc);
  if (polys.empty()) throw InvalidArgument("document lists no factors");
  Factorization f(polys.front().modulus());
  const Modulus& mod = f.modulus;
  try {
    f.mode = doc.at("mode").get<std::string>() == "targeted" ? FactorMode::targeted
                                                               : FactorMode::generator;
    if (doc.contains("indices")) f.indices = doc.at("indices").get<std::vector<int>>();
    f.verified = doc.value("verified", false);
    f.seed = doc.value("seed", std::uint64_t{0});
    f.search = doc.value("search", std::string("lex")) == "random" ? SeedSearch::random
                                                                   : SeedSearch::lexicographic;
    if (doc.contains("primitive")) {
      const auto pr = doc.at("primitive").get<std::vector<std::uint64_t>>();
      if (pr.size() == 2) f.primitive = {mod.p(), pr[0], pr[1]};
    }
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("malformed factorization document: ") + ex.what());
  }

  const RingPoly minus_one(mod, std::initializer_list<long>{-1, 1});
  const RingPoly plus_one(mod, std::initializer_list<long>{1, 1});
  bool seen_minus = false, seen_plus = false;
  for (const RingPoly& g : polys) {
    if (g == minus_one && !seen_minus) {
      seen_minus = true;
    } else if (g == plus_one && !seen_plus) {
      seen_plus = true;
    } else if (g.degree() == 2 && g.is_monic() && g.coeffs()[0] == 1) {
      if (g.coeffs()[1] == 0 && !f.has_psi) {
        f.has_psi = true;
      } else {
        f.quadratics.push_back({0, -g.coeff(1)});
      }
    } else {
      throw InvalidArgument("unexpected factor " + to_string(g));
    }
  }
  if (!seen_minus || !seen_plus) throw InvalidArgument("linear factors x - 1 and x + 1 required");
  return f;
}

}  // namespace dickson
