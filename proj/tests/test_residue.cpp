#include <doctest.h>

#include <stdexcept>

#include "zpk/residue.hpp"

using namespace zpk;

namespace {

// independent valuation oracle: trial division, v(0) = k
unsigned valuation_oracle(Nat x, const Modulus& m) {
  if (x == 0) return m.k();
  unsigned v = 0;
  while (x % m.p() == 0) {
    x /= m.p();
    ++v;
  }
  return v;
}

const Modulus kRings[] = {Modulus(2, 1), Modulus(2, 2), Modulus(2, 6), Modulus(3, 2),
                          Modulus(5, 2), Modulus(7, 1), Modulus(13, 1)};

}  // namespace

TEST_CASE("modulus validates prime, exponent, and size cap") {
  CHECK_THROWS_AS(Modulus(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(2, 21), std::invalid_argument);  // 2^21 > cap
  CHECK(Modulus(2, 20).size() == (Nat{1} << 20));          // exactly at cap
  CHECK(Modulus(3, 2).size() == 9);
  CHECK(Modulus(3, 2).pow_p(0) == 1);
  CHECK(Modulus(3, 2).pow_p(1) == 3);
  CHECK(Modulus(3, 2).pow_p(2) == 9);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const Modulus& m : kRings) {
    if (m.size() > 64) continue;
    for (Nat a = 0; a < m.size(); ++a) {
      CHECK(add_mod(a, 0, m) == a);
      CHECK(mul_mod(a, 1, m) == a);
      CHECK(add_mod(a, neg_mod(a, m), m) == 0);
      for (Nat b = 0; b < m.size(); ++b) {
        CHECK(add_mod(a, b, m) == add_mod(b, a, m));
        CHECK(mul_mod(a, b, m) == mul_mod(b, a, m));
        CHECK(sub_mod(add_mod(a, b, m), b, m) == a);
        for (Nat c = 0; c < m.size(); ++c) {
          CHECK(add_mod(a, add_mod(b, c, m), m) == add_mod(add_mod(a, b, m), c, m));
          CHECK(mul_mod(a, mul_mod(b, c, m), m) == mul_mod(mul_mod(a, b, m), c, m));
          CHECK(mul_mod(a, add_mod(b, c, m), m) ==
                add_mod(mul_mod(a, b, m), mul_mod(a, c, m), m));
        }
      }
    }
  }
}

TEST_CASE("valuation matches trial division, exhaustively") {
  for (const Modulus& m : kRings) {
    for (Nat x = 0; x < m.size(); ++x) {
      CHECK(valuation(x, m) == valuation_oracle(x, m));
      CHECK(is_unit(x, m) == (valuation(x, m) == 0));
    }
  }
}

TEST_CASE("units invert exactly; non-units throw") {
  for (const Modulus& m : kRings) {
    for (Nat x = 0; x < m.size(); ++x) {
      if (is_unit(x, m)) {
        const Nat y = unit_inverse(x, m);
        CHECK(mul_mod(x, y, m) == 1);
        CHECK(y < m.size());
      } else {
        CHECK_THROWS_AS(unit_inverse(x, m), std::domain_error);
      }
    }
  }
}

TEST_CASE("exact division returns a cofactor exactly when one exists") {
  for (const Modulus& m : kRings) {
    if (m.size() > 32) continue;
    for (Nat a = 0; a < m.size(); ++a)
      for (Nat b = 0; b < m.size(); ++b) {
        bool divisible = false;
        for (Nat c = 0; c < m.size(); ++c)
          if (mul_mod(c, b, m) == a) divisible = true;
        if (divisible) {
          CHECK(mul_mod(divide_exact(a, b, m), b, m) == a);
        } else {
          CHECK_THROWS_AS(divide_exact(a, b, m), std::domain_error);
        }
      }
  }
}

TEST_CASE("norm is multiplicative below precision and ultrametric throughout") {
  for (const Modulus& m : {Modulus(2, 3), Modulus(3, 2)}) {
    for (Nat x = 0; x < m.size(); ++x)
      for (Nat y = 0; y < m.size(); ++y) {
        const PadicNorm nx = norm_of(x, m), ny = norm_of(y, m);
        const PadicNorm ns = norm_of(add_mod(x, y, m), m);
        CHECK(ns <= std::max(nx, ny));  // ultrametric inequality
        if (!nx.is_zero() && !ny.is_zero() && nx.exponent() + ny.exponent() < m.k()) {
          const PadicNorm np = norm_of(mul_mod(x, y, m), m);
          CHECK(!np.is_zero());
          CHECK(np.exponent() == nx.exponent() + ny.exponent());
        }
      }
  }
}

TEST_CASE("norm ordering and formatting") {
  const Nat p = 2;
  const PadicNorm zero = PadicNorm::zero(p);
  const PadicNorm one = PadicNorm::inverse_power(p, 0);
  const PadicNorm half = PadicNorm::inverse_power(p, 1);
  const PadicNorm quarter = PadicNorm::inverse_power(p, 2);
  CHECK(zero < quarter);
  CHECK(quarter < half);
  CHECK(half < one);
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
  CHECK(one.str() == "1");
  CHECK(half.str() == "1/2");
  CHECK(quarter.str() == "1/4");
  CHECK(one.num() == 1);
  CHECK(one.den() == 1);
  CHECK(quarter.den() == 4);
  CHECK(zero.num() == 0);
  // valuation order reversal: larger valuation means smaller norm
  const Modulus m(2, 3);
  for (Nat x = 0; x < m.size(); ++x)
    for (Nat y = 0; y < m.size(); ++y)
      CHECK((norm_of(x, m) <= norm_of(y, m)) == (valuation(x, m) >= valuation(y, m)));
}

TEST_CASE("residue wrappers agree with the raw operations and police moduli") {
  const Modulus m(3, 2), other(5, 1);
  for (Nat a = 0; a < m.size(); ++a)
    for (Nat b = 0; b < m.size(); ++b) {
      CHECK((Residue(a, m) + Residue(b, m)).value() == add_mod(a, b, m));
      CHECK((Residue(a, m) - Residue(b, m)).value() == sub_mod(a, b, m));
      CHECK((Residue(a, m) * Residue(b, m)).value() == mul_mod(a, b, m));
      CHECK((-Residue(a, m)).value() == neg_mod(a, m));
    }
  CHECK(Residue(11, m).value() == 2);  // canonicalized on construction
  CHECK_THROWS_AS(Residue(1, m) + Residue(1, other), std::invalid_argument);
  CHECK(is_unit(Residue(2, m)));
  CHECK((inv_unit(Residue(2, m)) * Residue(2, m)).value() == 1);
}

TEST_CASE("precision reduction is the residue map") {
  const Modulus m(2, 3);
  for (Nat x = 0; x < m.size(); ++x) {
    const Residue r = reduce_precision(Residue(x, m), 1);
    CHECK(r.mod() == Modulus(2, 1));
    CHECK(r.value() == x % 2);
    CHECK(reduce_precision(Residue(x, m), 3).value() == x);
  }
  CHECK_THROWS_AS(reduce_precision(Residue(1, Modulus(2, 2)), 3), std::invalid_argument);
}
