#include "zpk/factor.hpp"

#include <stdexcept>

#include "zpk/solve.hpp"
#include "zpk/subgroups.hpp"

namespace zpk {

bool is_permutation_matrix(const GroupElement& g) {
  const Index n = g.window();
  for (Index i = 0; i < n; ++i) {
    Index ones = 0;
    for (Index j = 0; j < n; ++j) {
      Nat v = g.core()(i, j);
      if (v != 0 && v != 1) return false;
      if (v == 1) ++ones;
    }
    if (ones != 1) return false;
  }
  // invertibility (checked at construction) now forces one 1 per column
  return true;
}

std::vector<Factor> generator_factorization(const GroupElement& g, Index m) {
  if (m < 0) throw std::invalid_argument("factorization: corner size must be nonnegative");
  const Modulus& mod = g.mod();
  const GroupElement gt = trim_identity_tail(g);

  if (member(gt, SubgroupSpec::gl(m))) return {{FactorKind::gl_m, gt}};
  if (is_permutation_matrix(gt)) return {{FactorKind::permutation, gt}};

  const Index beta = std::max<Index>(gt.window() - m, 1);
  const Index n = m + beta;

  // right factor fixing the first m rows of g to standard basis rows
  ResidueMatrix b = extend_rows_to_invertible(padded_core(gt, n).block(0, 0, m, n));
  GroupElement big(b);
  GroupElement r = inverse(big);
  GroupElement g1 = gt * r;  // first m rows are e_1..e_m

  // left factor clearing the first m columns below the corner
  ResidueMatrix lcore = ResidueMatrix::identity(n, mod);
  ResidueMatrix g1c = padded_core(g1, n);
  for (Index i = m; i < n; ++i)
    for (Index j = 0; j < m; ++j) lcore.set(i, j, neg_mod(g1c(i, j), mod));
  GroupElement l(lcore);
  GroupElement g2 = l * g1;
  if (!member(g2, SubgroupSpec::gl(m)))
    throw std::logic_error("factorization: core reduction left the corner subgroup");

  // g = l^-1 * g2 * big; conjugating by the block swap theta moves the
  // outer factors into GL^[m]
  GroupElement th = theta(n, 0, mod);
  GroupElement linv = inverse(l);
  std::vector<Factor> out;
  auto emit_conjugated = [&](const GroupElement& x) {
    out.push_back({FactorKind::permutation, th});
    out.push_back({FactorKind::gl_m, th * x * th});
    out.push_back({FactorKind::permutation, th});
  };
  if (!(linv == GroupElement::identity(mod))) emit_conjugated(linv);
  out.push_back({FactorKind::gl_m, g2});
  if (!(big == GroupElement::identity(mod))) emit_conjugated(big);

  // exactness and tag checks are part of the contract
  if (!(factor_product(out, mod) == g))
    throw std::logic_error("factorization: product does not re-multiply to the input");
  for (const Factor& f : out) {
    bool ok = f.kind == FactorKind::permutation ? is_permutation_matrix(f.element)
                                                : member(f.element, SubgroupSpec::gl(m));
    if (!ok) throw std::logic_error("factorization: factor fails its tag check");
  }
  return out;
}

GroupElement factor_product(const std::vector<Factor>& factors, const Modulus& m) {
  GroupElement acc = GroupElement::identity(m);
  for (const Factor& f : factors) acc = acc * f.element;
  return acc;
}

}  // namespace zpk
