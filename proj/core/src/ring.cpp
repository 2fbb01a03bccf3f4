#include "dickson/ring.hpp"

#include <algorithm>
#include <sstream>

#include "dickson/errors.hpp"

namespace dickson {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to avoid overflow near 2^63.
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw NotAUnit("value is not invertible");
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Modulus

Modulus::Modulus(std::uint64_t p, int e) {
  if (p == 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("p must be an odd prime");
  }
  if (e < 1) throw InvalidArgument("e must be at least 1");
  auto state = std::make_shared<State>();
  state->p = p;
  state->e = e;
  state->powers.reserve(static_cast<std::size_t>(e) + 1);
  state->powers.emplace_back(1);
  for (int h = 1; h <= e; ++h) {
    state->powers.push_back(state->powers.back() * static_cast<unsigned long>(p));
  }
  if (mpz_sizeinbase(state->powers.back().get_mpz_t(), 2) <= 63) {
    state->word = state->powers.back().get_ui();
  }
  state_ = std::move(state);
}

const BigInt& Modulus::power(int h) const {
  if (h < 0 || h > e()) throw InvalidArgument("power index out of range");
  return state_->powers[static_cast<std::size_t>(h)];
}

Modulus Modulus::with_exponent(int h) const {
  if (h == e()) return *this;
  return Modulus(p(), h);
}

void Modulus::reduce(BigInt& x) const {
  if (fits_word() && sgn(x) >= 0 && mpz_fits_ulong_p(x.get_mpz_t())) {
    const auto v = x.get_ui();
    if (v >= state_->word) x = v % state_->word;
    return;
  }
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), value().get_mpz_t());
}

// ---------------------------------------------------------------- RingElem

RingElem::RingElem(Modulus mod, BigInt value) : mod_(std::move(mod)), value_(std::move(value)) {
  mod_.reduce(value_);
}

RingElem::RingElem(Modulus mod, long value) : RingElem(std::move(mod), BigInt(value)) {}

void RingElem::check_same(const RingElem& other) const {
  if (!(mod_ == other.mod_)) throw ModulusMismatch();
}

ElementClass RingElem::classify() const {
  if (value_ == 0) return ElementClass::zero;
  if (mpz_divisible_ui_p(value_.get_mpz_t(), mod_.p()) != 0) return ElementClass::zero_divisor;
  return ElementClass::unit;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  if (r.value_ != 0) r.value_ = mod_.value() - r.value_;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& other) {
  check_same(other);
  value_ += other.value_;
  if (value_ >= mod_.value()) value_ -= mod_.value();
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& other) {
  check_same(other);
  value_ -= other.value_;
  if (sgn(value_) < 0) value_ += mod_.value();
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& other) {
  check_same(other);
  if (mod_.fits_word()) {
    value_ = mul_mod(value_.get_ui(), other.value_.get_ui(), mod_.word());
  } else {
    value_ *= other.value_;
    mod_.reduce(value_);
  }
  return *this;
}

RingElem RingElem::pow(std::uint64_t exponent) const {
  RingElem r = *this;
  mpz_powm_ui(r.value_.get_mpz_t(), value_.get_mpz_t(), exponent, mod_.value().get_mpz_t());
  return r;
}

RingElem mod_inv(const RingElem& a) {
  if (!a.is_unit()) throw NotAUnit("element " + a.value().get_str() + " is not a unit");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), a.value().get_mpz_t(), a.modulus().value().get_mpz_t());
  return RingElem(a.modulus(), std::move(inv));
}

int p_valuation(const BigInt& x, std::uint64_t p, int cap) {
  if (x == 0) return cap;
  BigInt rest = x;
  int t = 0;
  while (t < cap && mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++t;
  }
  return t;
}

int p_valuation(const RingElem& a) {
  return p_valuation(a.value(), a.modulus().p(), a.modulus().e());
}

// ---------------------------------------------------------------- RingPoly

RingPoly::RingPoly(Modulus mod) : mod_(std::move(mod)) {}

RingPoly::RingPoly(Modulus mod, std::vector<BigInt> coeffs)
    : mod_(std::move(mod)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) mod_.reduce(c);
  normalize();
}

RingPoly::RingPoly(Modulus mod, std::initializer_list<long> coeffs) : mod_(std::move(mod)) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) {
    coeffs_.emplace_back(c);
    mod_.reduce(coeffs_.back());
  }
  normalize();
}

RingPoly RingPoly::x_pow_minus_one(Modulus mod, std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return RingPoly(std::move(mod), std::move(c));
}

void RingPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RingElem RingPoly::coeff(std::size_t i) const {
  if (i >= coeffs_.size()) return RingElem(mod_, 0L);
  return RingElem(mod_, coeffs_[i]);
}

bool RingPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool RingPoly::is_self_reciprocal() const {
  if (coeffs_.empty()) return false;
  const RingElem c0(mod_, coeffs_.front());
  if (!c0.is_unit()) return false;
  const RingElem scale = mod_inv(c0);
  const std::size_t d = coeffs_.size() - 1;
  for (std::size_t i = 0; i <= d; ++i) {
    if (!(scale * RingElem(mod_, coeffs_[d - i]) == RingElem(mod_, coeffs_[i]))) return false;
  }
  return true;
}

RingPoly RingPoly::operator-() const {
  RingPoly r = *this;
  for (auto& c : r.coeffs_) {
    if (c != 0) c = mod_.value() - c;
  }
  return r;
}

RingPoly RingPoly::scaled(const RingElem& c) const {
  if (!(c.modulus() == mod_)) throw ModulusMismatch();
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * c.value();
  return RingPoly(mod_, std::move(out));
}

RingPoly RingPoly::reduced_to(const Modulus& smaller) const {
  if (smaller.p() != mod_.p() || smaller.e() > mod_.e()) {
    throw InvalidArgument("can only reduce to a smaller power of the same prime");
  }
  return RingPoly(smaller, coeffs_);
}

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
  if (!(a.mod_ == b.mod_)) throw ModulusMismatch();
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return RingPoly(a.mod_, std::move(out));
}

RingPoly operator-(const RingPoly& a, const RingPoly& b) { return a + (-b); }

RingPoly operator*(const RingPoly& a, const RingPoly& b) { return poly_mul_mod(a, b); }

RingPoly poly_mul_mod(const RingPoly& f, const RingPoly& g) {
  if (!(f.modulus() == g.modulus())) throw ModulusMismatch();
  if (f.is_zero() || g.is_zero()) return RingPoly(f.modulus());
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  const Modulus& mod = f.modulus();
  std::vector<BigInt> out(fc.size() + gc.size() - 1);
  if (mod.fits_word()) {
    // Accumulate in 128 bits; reduce every term since m may be close to 2^63.
    const std::uint64_t m = mod.word();
    std::vector<std::uint64_t> acc(out.size(), 0);
    std::vector<std::uint64_t> gw(gc.size());
    for (std::size_t j = 0; j < gc.size(); ++j) gw[j] = gc[j].get_ui();
    for (std::size_t i = 0; i < fc.size(); ++i) {
      const std::uint64_t fi = fc[i].get_ui();
      if (fi == 0) continue;
      for (std::size_t j = 0; j < gw.size(); ++j) {
        std::uint64_t t = acc[i + j] + mul_mod(fi, gw[j], m);
        acc[i + j] = t >= m ? t - m : t;
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = acc[k];
  } else {
    for (std::size_t i = 0; i < fc.size(); ++i) {
      if (fc[i] == 0) continue;
      for (std::size_t j = 0; j < gc.size(); ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), fc[i].get_mpz_t(), gc[j].get_mpz_t());
      }
    }
  }
  return RingPoly(mod, std::move(out));
}

std::pair<RingPoly, RingPoly> poly_divrem(const RingPoly& f, const RingPoly& monic) {
  if (!(f.modulus() == monic.modulus())) throw ModulusMismatch();
  if (!monic.is_monic()) throw InvalidArgument("divisor must be monic");
  const Modulus& mod = f.modulus();
  const int dd = monic.degree();
  if (f.degree() < dd) return {RingPoly(mod), f};

  std::vector<BigInt> rem = f.coeffs();
  std::vector<BigInt> quo(static_cast<std::size_t>(f.degree() - dd + 1));
  const auto& dc = monic.coeffs();
  for (int k = f.degree(); k >= dd; --k) {
    BigInt lead = rem[static_cast<std::size_t>(k)];
    mod.reduce(lead);
    quo[static_cast<std::size_t>(k - dd)] = lead;
    if (lead == 0) continue;
    for (int j = 0; j < dd; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + j)];
      mpz_submul(slot.get_mpz_t(), lead.get_mpz_t(), dc[static_cast<std::size_t>(j)].get_mpz_t());
      mod.reduce(slot);
    }
    rem[static_cast<std::size_t>(k)] = 0;
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RingPoly(mod, std::move(quo)), RingPoly(mod, std::move(rem))};
}

RingPoly poly_mul_mod(const RingPoly& f, const RingPoly& g, const RingPoly& reducer) {
  return poly_divrem(poly_mul_mod(f, g), reducer).second;
}

RingElem poly_eval(const RingPoly& f, const RingElem& x) {
  if (!(f.modulus() == x.modulus())) throw ModulusMismatch();
  RingElem acc(x.modulus(), 0L);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += RingElem(x.modulus(), *it);
  }
  return acc;
}

std::string to_string(const RingPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const BigInt& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << '*';
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace dickson
