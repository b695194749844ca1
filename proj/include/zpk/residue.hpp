#pragma once

#include <cstdint>
#include <string>

namespace zpk {

using Nat = std::uint64_t;

// Ring size cap. With p^k <= 2^20 every entry is < 2^20, every product
// < 2^40, and any sum of fewer than 2^24 products fits in Nat exactly,
// so modular reduction can always be deferred past a full matrix product.
inline constexpr Nat max_ring_size = Nat{1} << 20;

// The ring Z/p^k for a prime p and k >= 1. Construction validates
// primality and the ring size cap. Value type, cheap to copy.
class Modulus {
public:
  Modulus(Nat p, unsigned k);

  Nat p() const { return p_; }
  unsigned k() const { return k_; }
  // p^k
  Nat size() const { return size_; }
  // p^e for e <= k
  Nat pow_p(unsigned e) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

private:
  Nat p_;
  unsigned k_;
  Nat size_;
};

// Canonical representative in [0, p^k).
inline Nat reduce(Nat x, const Modulus& m) { return x % m.size(); }

inline Nat add_mod(Nat a, Nat b, const Modulus& m) { return (a + b) % m.size(); }
inline Nat sub_mod(Nat a, Nat b, const Modulus& m) { return (a + m.size() - b) % m.size(); }
inline Nat mul_mod(Nat a, Nat b, const Modulus& m) { return (a * b) % m.size(); }
inline Nat neg_mod(Nat a, const Modulus& m) { return (m.size() - a) % m.size(); }

// Largest e <= k with p^e dividing x; valuation(0) = k.
unsigned valuation(Nat x, const Modulus& m);

inline bool is_unit(Nat x, const Modulus& m) { return x % m.p() != 0; }

// Inverse of a unit. Throws std::domain_error naming the valuation otherwise.
Nat unit_inverse(Nat x, const Modulus& m);

// Exact division: the c with c*b = a. Requires valuation(a) >= valuation(b);
// among all such c returns p^(v(a)-v(b)) * unit. Throws std::domain_error
// when a is not divisible by b in the ring.
Nat divide_exact(Nat a, Nat b, const Modulus& m);

// The norm |x| = p^(-valuation(x)), with |0| reported as exact zero at the
// working precision. Totally ordered; values are 0 or p^(-e), 0 <= e < k.
class PadicNorm {
public:
  static PadicNorm zero(Nat p) { return PadicNorm(p, 0, true); }
  static PadicNorm inverse_power(Nat p, unsigned e) { return PadicNorm(p, e, false); }

  bool is_zero() const { return zero_; }
  Nat p() const { return p_; }
  // meaningful only when !is_zero()
  unsigned exponent() const { return e_; }

  // exact rational value as numerator / denominator
  Nat num() const { return zero_ ? 0 : 1; }
  Nat den() const;

  std::string str() const;

  friend bool operator==(const PadicNorm&, const PadicNorm&) = default;
  friend bool operator<(const PadicNorm& a, const PadicNorm& b) {
    if (a.zero_ != b.zero_) return a.zero_;
    if (a.zero_) return false;
    return a.e_ > b.e_;
  }
  friend bool operator<=(const PadicNorm& a, const PadicNorm& b) { return a < b || a == b; }
  friend bool operator>(const PadicNorm& a, const PadicNorm& b) { return b < a; }
  friend bool operator>=(const PadicNorm& a, const PadicNorm& b) { return b <= a; }

private:
  PadicNorm(Nat p, unsigned e, bool zero) : p_(p), e_(e), zero_(zero) {}
  Nat p_;
  unsigned e_;
  bool zero_;
};

inline PadicNorm norm_of(Nat x, const Modulus& m) {
  unsigned v = valuation(x, m);
  return v == m.k() ? PadicNorm::zero(m.p()) : PadicNorm::inverse_power(m.p(), v);
}

// Scalar of the ring: a canonical representative tied to its Modulus.
// Binary operations require equal moduli and throw std::invalid_argument
// on mismatch.
class Residue {
public:
  Residue(Nat value, Modulus m) : v_(reduce(value, m)), m_(m) {}

  Nat value() const { return v_; }
  const Modulus& mod() const { return m_; }

  friend bool operator==(const Residue&, const Residue&) = default;

private:
  Nat v_;
  Modulus m_;
};

Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);
Residue operator-(const Residue& a);

inline unsigned valuation(const Residue& a) { return valuation(a.value(), a.mod()); }
inline bool is_unit(const Residue& a) { return is_unit(a.value(), a.mod()); }
inline PadicNorm norm_of(const Residue& a) { return norm_of(a.value(), a.mod()); }
inline Residue inv_unit(const Residue& a) {
  return Residue(unit_inverse(a.value(), a.mod()), a.mod());
}

// Ring map Z/p^k -> Z/p^k' for k' <= k (reduction mod p^k').
// Throws std::invalid_argument when k' exceeds the source precision.
Residue reduce_precision(const Residue& a, unsigned k_target);

}  // namespace zpk
