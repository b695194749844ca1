#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zpk/enumerate.hpp"
#include "zpk/matrix.hpp"
#include "zpk/rng.hpp"

using namespace zpk;

namespace {

ResidueMatrix from_rows(const std::vector<std::vector<Nat>>& rows, const Modulus& m) {
  MatN e(static_cast<Index>(rows.size()), static_cast<Index>(rows.empty() ? 0 : rows[0].size()));
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j) e(i, j) = rows[i][j];
  return ResidueMatrix(e, m);
}

// independent determinant oracle: full permutation expansion
Nat det_oracle(const ResidueMatrix& a) {
  const Modulus& m = a.mod();
  const Index n = a.rows();
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  Nat total = 0;
  do {
    // sign by counting inversions
    int inversions = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Nat term = 1;
    for (Index i = 0; i < n; ++i) term = mul_mod(term, a(i, perm[i]), m);
    total = (inversions % 2 == 0) ? add_mod(total, term, m) : sub_mod(total, term, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("matrix construction canonicalizes and validates shapes") {
  const Modulus m(3, 1);
  MatN e(2, 2);
  e << 5, 0, 1, 7;
  const ResidueMatrix a(e, m);
  CHECK(a(0, 0) == 2);
  CHECK(a(1, 1) == 1);
  const ResidueMatrix z = ResidueMatrix::zero(2, 3, m);
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  CHECK(ResidueMatrix::identity(3, m)(2, 2) == 1);
  CHECK(ResidueMatrix::identity(3, m)(1, 2) == 0);
}

TEST_CASE("matrix arithmetic satisfies the ring identities on random inputs") {
  Rng rng(101);
  for (const Modulus& m : {Modulus(2, 2), Modulus(3, 1), Modulus(5, 2)}) {
    for (int rep = 0; rep < 10; ++rep) {
      const ResidueMatrix a = random_matrix(rng, 3, 4, m);
      const ResidueMatrix b = random_matrix(rng, 3, 4, m);
      const ResidueMatrix c = random_matrix(rng, 4, 2, m);
      const ResidueMatrix d = random_matrix(rng, 2, 5, m);
      CHECK(a + b == b + a);
      CHECK((a + b) - b == a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * c) * d == a * (c * d));
      CHECK(transposed(a * c) == transposed(c) * transposed(a));
      CHECK(-(-a) == a);
    }
  }
  CHECK_THROWS_AS(random_matrix(rng, 2, 3, Modulus(2, 1)) * random_matrix(rng, 2, 3, Modulus(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_matrix(rng, 2, 2, Modulus(2, 1)) + random_matrix(rng, 2, 2, Modulus(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("block access composes with set_block") {
  Rng rng(103);
  const Modulus m(5, 1);
  const ResidueMatrix a = random_matrix(rng, 4, 4, m);
  ResidueMatrix b = ResidueMatrix::zero(4, 4, m);
  b.set_block(0, 0, a.block(0, 0, 2, 2));
  b.set_block(0, 2, a.block(0, 2, 2, 2));
  b.set_block(2, 0, a.block(2, 0, 2, 2));
  b.set_block(2, 2, a.block(2, 2, 2, 2));
  CHECK(a == b);
}

TEST_CASE("invertibility, determinant, and inverse agree exhaustively on 2x2") {
  for (const Modulus& m : {Modulus(2, 1), Modulus(2, 2), Modulus(3, 1)}) {
    Nat invertible_seen = 0;
    for_each_matrix(2, 2, m, Nat{1} << 16, [&](const ResidueMatrix& a) {
      const bool inv = is_invertible(a);
      CHECK(inv == is_unit(det(a), m));
      CHECK(inv == (fp_rank(a) == 2));
      if (inv) {
        ++invertible_seen;
        const ResidueMatrix b = inverse(a);
        CHECK(a * b == ResidueMatrix::identity(2, m));
        CHECK(b * a == ResidueMatrix::identity(2, m));
      } else {
        CHECK_THROWS_AS(inverse(a), std::domain_error);
      }
      return true;
    });
    CHECK(invertible_seen == gl_order(2, m));
  }
}

TEST_CASE("determinant matches the permutation expansion and is multiplicative") {
  Rng rng(107);
  for (const Modulus& m : {Modulus(2, 2), Modulus(3, 1), Modulus(7, 1)}) {
    for (int rep = 0; rep < 20; ++rep) {
      const ResidueMatrix a = random_matrix(rng, 3, 3, m);
      const ResidueMatrix b = random_matrix(rng, 3, 3, m);
      CHECK(det(a) == det_oracle(a));
      CHECK(det(a * b) == mul_mod(det(a), det(b), m));
    }
  }
  const Modulus m4(2, 2);
  CHECK(det(ResidueMatrix::identity(3, m4)) == 1);
  CHECK(det(from_rows({{2, 0}, {0, 2}}, m4)) == 0);  // 4 = 0 mod 4
  CHECK(fp_rank(from_rows({{2, 0}, {0, 2}}, m4)) == 0);
  CHECK(fp_rank(from_rows({{1, 1}, {1, 1}}, m4)) == 1);
  CHECK(fp_rank(from_rows({{2, 1}, {0, 2}}, m4)) == 1);
}

TEST_CASE("group elements reject singular cores and compare modulo padding") {
  const Modulus m(2, 1);
  CHECK_THROWS_AS(GroupElement(ResidueMatrix::zero(2, 2, m)), std::domain_error);
  const GroupElement e2 = GroupElement::identity(m, 2);
  const GroupElement e5 = GroupElement::identity(m, 5);
  CHECK(e2 == e5);
  CHECK(e2.window() == 2);

  Rng rng(109);
  const GroupElement g = random_invertible(rng, 3, m);
  CHECK(g == padded(g, 7));
  CHECK(padded(g, 7).window() == 7);
  CHECK(trim_identity_tail(padded(g, 7)).window() <= 3);
  CHECK(trim_identity_tail(padded(g, 7)) == g);
  // entries outside the window read as the identity
  CHECK(g.entry(10, 10) == 1);
  CHECK(g.entry(10, 11) == 0);
  CHECK(g.entry(1, 10) == 0);
}

TEST_CASE("group product, inverse, and padding agree with core arithmetic") {
  Rng rng(113);
  for (const Modulus& m : {Modulus(2, 2), Modulus(3, 1)}) {
    for (int rep = 0; rep < 10; ++rep) {
      const GroupElement a = random_invertible(rng, 3, m);
      const GroupElement b = random_invertible(rng, 5, m);  // mixed windows
      const GroupElement c = random_invertible(rng, 2, m);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * inverse(a) == GroupElement::identity(m));
      CHECK(inverse(a) * a == GroupElement::identity(m));
      CHECK(inverse(a * b) == inverse(b) * inverse(a));
      CHECK(padded_core(a, 5) == padded(a, 5).core());
    }
  }
}

TEST_CASE("theta swaps the two coordinate blocks after the offset") {
  const Modulus m(2, 1);
  const GroupElement t = theta(1, 0, m);
  CHECK(t.window() == 2);
  CHECK(t.entry(0, 1) == 1);
  CHECK(t.entry(1, 0) == 1);
  CHECK(t.entry(0, 0) == 0);

  for (Index j : {Index{1}, Index{2}, Index{3}})
    for (Index alpha : {Index{0}, Index{1}, Index{2}}) {
      const GroupElement th = theta(j, alpha, m);
      CHECK(th.window() == alpha + 2 * j);
      CHECK(th * th == GroupElement::identity(m));  // involution
      for (Index i = 0; i < alpha; ++i) CHECK(th.entry(i, i) == 1);
      // column alpha+s carries its 1 in row alpha+j+s and conversely
      for (Index s = 0; s < j; ++s) {
        CHECK(th.entry(alpha + j + s, alpha + s) == 1);
        CHECK(th.entry(alpha + s, alpha + j + s) == 1);
        CHECK(th.entry(alpha + s, alpha + s) == 0);
      }
    }
  CHECK(theta(0, 2, m) == GroupElement::identity(m));
}

TEST_CASE("permutation embedding is a group homomorphism") {
  const Modulus m(3, 1);
  Rng rng(127);
  for (int rep = 0; rep < 10; ++rep) {
    const std::vector<Index> s = random_permutation(rng, 5);
    const std::vector<Index> t = random_permutation(rng, 5);
    std::vector<Index> st(5);
    for (Index j = 0; j < 5; ++j) st[j] = s[t[j]];
    CHECK(permutation_embed(st, m) == permutation_embed(s, m) * permutation_embed(t, m));
    // column j has its 1 in row s[j]
    const GroupElement ps = permutation_embed(s, m);
    for (Index j = 0; j < 5; ++j) CHECK(ps.entry(s[j], j) == 1);
  }
}

TEST_CASE("sup-norm metric is an invariant ultrametric") {
  Rng rng(131);
  const Modulus m(2, 2);
  const GroupElement e = GroupElement::identity(m);
  for (int rep = 0; rep < 15; ++rep) {
    const GroupElement a = random_invertible(rng, 3, m);
    const GroupElement b = random_invertible(rng, 4, m);
    const GroupElement c = random_invertible(rng, 2, m);
    const GroupElement g = random_invertible(rng, 4, m);
    CHECK(metric_d(a, a) == PadicNorm::zero(2));
    CHECK(metric_d(a, b) == metric_d(b, a));
    CHECK(metric_d(a, c) <= std::max(metric_d(a, b), metric_d(b, c)));
    // two-sided invariance
    CHECK(metric_d(g * a, g * b) == metric_d(a, b));
    CHECK(metric_d(a * g, b * g) == metric_d(a, b));
    CHECK((metric_d(a, b) == PadicNorm::zero(2)) == (a == b));
  }
  // 1 + 2*E01 differs from 1 by an entry of valuation 1
  ResidueMatrix core = ResidueMatrix::identity(2, m);
  core.set(0, 1, 2);
  CHECK(metric_d(GroupElement(core), e) == PadicNorm::inverse_power(2, 1));
  core.set(0, 1, 1);
  CHECK(metric_d(GroupElement(core), e) == PadicNorm::inverse_power(2, 0));
}

TEST_CASE("block embedding places the inner matrix on the diagonal") {
  const Modulus m(5, 1);
  Rng rng(137);
  const ResidueMatrix inner = random_matrix(rng, 2, 2, m);
  const ResidueMatrix big = block_embed(inner, 1, 4);
  CHECK(big.rows() == 4);
  CHECK(big(0, 0) == 1);
  CHECK(big(1, 1) == inner(0, 0));
  CHECK(big(2, 1) == inner(1, 0));
  CHECK(big(3, 3) == 1);
  CHECK(big(0, 1) == 0);
}
