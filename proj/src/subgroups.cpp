#include "zpk/subgroups.hpp"

#include <stdexcept>

namespace zpk {

namespace {

bool divisible(Nat x, Nat pe) { return x % pe == 0; }

bool member_gl_m(const GroupElement& g, Index m) {
  const Index w = std::max(g.window(), m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < w; ++j) {
      Nat want_row = (i == j) ? 1 : 0;
      if (g.entry(i, j) != want_row) return false;
      if (g.entry(j, i) != want_row) return false;
    }
  return true;
}

bool member_gl_km(const GroupElement& g, Index m, unsigned j, const Modulus& mod) {
  if (j > mod.k()) throw std::invalid_argument("membership: congruence exponent exceeds precision");
  const Nat pe = mod.pow_p(j);
  const Index w = std::max(g.window(), m);
  for (Index r = 0; r < m; ++r)
    for (Index c = 0; c < w; ++c) {
      Nat corner = (r == c) ? sub_mod(g.entry(r, c), 1, mod) : g.entry(r, c);
      if (c < m) {
        if (!divisible(corner, pe)) return false;
      } else {
        if (!divisible(g.entry(r, c), pe)) return false;
        if (!divisible(g.entry(c, r), pe)) return false;
      }
    }
  return true;
}

bool member_congruence(const GroupElement& g, unsigned j, const Modulus& mod) {
  if (j > mod.k()) throw std::invalid_argument("membership: congruence exponent exceeds precision");
  const Nat pe = mod.pow_p(j);
  const Index w = g.window();
  for (Index r = 0; r < w; ++r)
    for (Index c = 0; c < w; ++c) {
      Nat d = (r == c) ? sub_mod(g.entry(r, c), 1, mod) : g.entry(r, c);
      if (!divisible(d, pe)) return false;
    }
  return true;
}

}  // namespace

ResidueMatrix symplectic_gram(Index window, const Modulus& m) {
  if (window % 2 != 0) throw std::invalid_argument("symplectic form needs an even window");
  ResidueMatrix gram = ResidueMatrix::zero(window, window, m);
  for (Index t = 0; t < window / 2; ++t) {
    gram.set(2 * t, 2 * t + 1, 1);
    gram.set(2 * t + 1, 2 * t, neg_mod(1, m));
  }
  return gram;
}

bool member(const GroupElement& g, const SubgroupSpec& s) {
  const Modulus& mod = g.mod();
  switch (s.kind) {
    case SubgroupKind::gl_m:
      return member_gl_m(g, s.m);
    case SubgroupKind::gl_km:
      return member_gl_km(g, s.m, s.j, mod);
    case SubgroupKind::congruence:
      return member_congruence(g, s.j, mod);
    case SubgroupKind::orthogonal: {
      const ResidueMatrix& c = g.core();
      return transposed(c) * c == ResidueMatrix::identity(g.window(), mod);
    }
    case SubgroupKind::symplectic: {
      const Index w = g.window() + (g.window() % 2);
      ResidueMatrix c = padded_core(g, w);
      ResidueMatrix gram = symplectic_gram(w, mod);
      ResidueMatrix rhs = s.literal_identity_rhs ? ResidueMatrix::identity(w, mod) : gram;
      return transposed(c) * gram * c == rhs;
    }
  }
  throw std::logic_error("membership: unknown subgroup kind");
}

}  // namespace zpk
