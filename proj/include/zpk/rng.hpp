#pragma once

#include <vector>

#include "zpk/matrix.hpp"

namespace zpk {

// Deterministic splitmix64 stream. Identical seeds give identical draws on
// every platform, which keeps generated reports byte-stable.
class Rng {
public:
  explicit Rng(Nat seed) : state_(seed) {}

  Nat next() {
    Nat z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform-ish draw in [0, bound); bound >= 1
  Nat below(Nat bound) { return next() % bound; }

  Nat residue(const Modulus& m) { return below(m.size()); }

  Nat unit(const Modulus& m) {
    while (true) {
      Nat x = residue(m);
      if (is_unit(x, m)) return x;
    }
  }

private:
  Nat state_;
};

ResidueMatrix random_matrix(Rng& rng, Index rows, Index cols, const Modulus& m);
GroupElement random_invertible(Rng& rng, Index n, const Modulus& m);
// diag(1_m, h) for random h in GL(n - m)
GroupElement random_gl_m(Rng& rng, Index m, Index n, const Modulus& mod);
std::vector<Index> random_permutation(Rng& rng, Index n);

}  // namespace zpk
