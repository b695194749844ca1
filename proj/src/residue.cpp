#include "zpk/residue.hpp"

#include <stdexcept>

namespace zpk {

namespace {

bool is_prime(Nat p) {
  if (p < 2) return false;
  for (Nat d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Modulus::Modulus(Nat p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("modulus: p = " + std::to_string(p) + " is not prime");
  if (k == 0) throw std::invalid_argument("modulus: k must be >= 1");
  Nat s = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (s > max_ring_size / p)
      throw std::invalid_argument("modulus: p^k exceeds the exact-arithmetic cap 2^20");
    s *= p;
  }
  size_ = s;
}

Nat Modulus::pow_p(unsigned e) const {
  if (e > k_) throw std::invalid_argument("modulus: exponent exceeds precision");
  Nat s = 1;
  for (unsigned i = 0; i < e; ++i) s *= p_;
  return s;
}

unsigned valuation(Nat x, const Modulus& m) {
  if (x % m.size() == 0) return m.k();
  x %= m.size();
  unsigned v = 0;
  while (x % m.p() == 0) {
    x /= m.p();
    ++v;
  }
  return v;
}

Nat unit_inverse(Nat x, const Modulus& m) {
  x %= m.size();
  if (!is_unit(x, m))
    throw std::domain_error("inverse of non-unit: valuation " + std::to_string(valuation(x, m)) +
                            " > 0 at precision " + std::to_string(m.k()));
  // extended Euclid on (x, p^k); values stay below 2^20 so int64 is exact
  std::int64_t r0 = static_cast<std::int64_t>(m.size()), r1 = static_cast<std::int64_t>(x);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  std::int64_t inv = t0 % static_cast<std::int64_t>(m.size());
  if (inv < 0) inv += static_cast<std::int64_t>(m.size());
  return static_cast<Nat>(inv);
}

Nat divide_exact(Nat a, Nat b, const Modulus& m) {
  a %= m.size();
  b %= m.size();
  unsigned vb = valuation(b, m);
  if (valuation(a, m) < vb)
    throw std::domain_error("exact division: dividend valuation below divisor valuation");
  if (a == 0) return 0;
  Nat pe = m.pow_p(vb);
  return mul_mod(a / pe, unit_inverse(b / pe, m), m);
}

Nat PadicNorm::den() const {
  if (zero_) return 1;
  Nat d = 1;
  for (unsigned i = 0; i < e_; ++i) d *= p_;
  return d;
}

std::string PadicNorm::str() const {
  if (zero_) return "0";
  if (e_ == 0) return "1";
  return "1/" + std::to_string(den());
}

namespace {

void require_same(const Residue& a, const Residue& b) {
  if (!(a.mod() == b.mod()))
    throw std::invalid_argument("residues from different rings do not interoperate");
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(add_mod(a.value(), b.value(), a.mod()), a.mod());
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(sub_mod(a.value(), b.value(), a.mod()), a.mod());
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same(a, b);
  return Residue(mul_mod(a.value(), b.value(), a.mod()), a.mod());
}

Residue operator-(const Residue& a) { return Residue(neg_mod(a.value(), a.mod()), a.mod()); }

Residue reduce_precision(const Residue& a, unsigned k_target) {
  if (k_target > a.mod().k())
    throw std::invalid_argument("reduce_precision: target precision exceeds source");
  Modulus t(a.mod().p(), k_target);
  return Residue(a.value() % t.size(), t);
}

}  // namespace zpk
