#include "zpk/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace zpk {

ResidueMatrix random_matrix(Rng& rng, Index rows, Index cols, const Modulus& m) {
  MatN w(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) w(i, j) = rng.residue(m);
  return ResidueMatrix(std::move(w), m);
}

GroupElement random_invertible(Rng& rng, Index n, const Modulus& m) {
  // rejection sampling; the invertible fraction is at least
  // prod_i (1 - p^-i) > 0.28 for p = 2
  while (true) {
    ResidueMatrix a = random_matrix(rng, n, n, m);
    if (is_invertible(a)) return GroupElement(std::move(a));
  }
}

GroupElement random_gl_m(Rng& rng, Index m, Index n, const Modulus& mod) {
  if (n < m) throw std::invalid_argument("random_gl_m: window below corner size");
  ResidueMatrix core = ResidueMatrix::identity(n, mod);
  if (n > m) core.set_block(m, m, random_invertible(rng, n - m, mod).core());
  return GroupElement(std::move(core));
}

std::vector<Index> random_permutation(Rng& rng, Index n) {
  std::vector<Index> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), Index{0});
  for (Index i = n - 1; i > 0; --i)
    std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(rng.below(static_cast<Nat>(i) + 1))]);
  return sigma;
}

}  // namespace zpk
