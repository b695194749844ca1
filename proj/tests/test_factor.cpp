#include <doctest.h>

#include "zpk/factor.hpp"
#include "zpk/rng.hpp"
#include "zpk/subgroups.hpp"

using namespace zpk;

TEST_CASE("permutation matrix recognition") {
  const Modulus m(3, 1);
  Rng rng(401);
  CHECK(is_permutation_matrix(GroupElement::identity(m, 3)));
  CHECK(is_permutation_matrix(permutation_embed(random_permutation(rng, 5), m)));
  CHECK(is_permutation_matrix(theta(2, 1, m)));
  ResidueMatrix c = ResidueMatrix::identity(2, m);
  c.set(0, 1, 1);
  CHECK(!is_permutation_matrix(GroupElement(c)));  // unipotent, not 0/1-per-line
  ResidueMatrix d = ResidueMatrix::identity(2, m);
  d.set(0, 0, 2);
  CHECK(!is_permutation_matrix(GroupElement(d)));  // scaled diagonal
}

TEST_CASE("empty factor lists multiply to the identity") {
  const Modulus m(2, 1);
  CHECK(factor_product({}, m) == GroupElement::identity(m));
}

TEST_CASE("factorization re-multiplies exactly with valid tags across a grid") {
  Rng rng(403);
  for (const Modulus& mod : {Modulus(2, 1), Modulus(2, 2), Modulus(3, 1), Modulus(3, 2)}) {
    for (Index m = 0; m <= 2; ++m)
      for (Index n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
          const GroupElement g = random_invertible(rng, n, mod);
          const std::vector<Factor> fs = generator_factorization(g, m);
          CHECK(factor_product(fs, mod) == g);
          for (const Factor& f : fs) {
            if (f.kind == FactorKind::permutation) {
              CHECK(is_permutation_matrix(f.element));
            } else {
              CHECK(member(f.element, SubgroupSpec::gl(m)));
            }
          }
        }
  }
}

TEST_CASE("special inputs factor cleanly") {
  const Modulus mod(2, 2);
  Rng rng(405);
  // the identity
  for (Index m = 0; m <= 2; ++m)
    CHECK(factor_product(generator_factorization(GroupElement::identity(mod, 3), m), mod) ==
          GroupElement::identity(mod));
  // an element already inside the depth subgroup
  const GroupElement deep = random_gl_m(rng, 2, 5, mod);
  const std::vector<Factor> fs = generator_factorization(deep, 2);
  CHECK(factor_product(fs, mod) == deep);
  // a pure block swap
  const GroupElement th = theta(2, 1, mod);
  CHECK(factor_product(generator_factorization(th, 1), mod) == th);
  // window smaller than the depth
  const GroupElement tiny = random_invertible(rng, 1, mod);
  CHECK(factor_product(generator_factorization(tiny, 3), mod) == tiny);
}

TEST_CASE("factor counts stay modest for window-3 inputs") {
  Rng rng(407);
  const Modulus mod(2, 1);
  for (int rep = 0; rep < 20; ++rep) {
    const GroupElement g = random_invertible(rng, 3, mod);
    CHECK(generator_factorization(g, 1).size() <= 9);
  }
}
