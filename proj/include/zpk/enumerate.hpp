#pragma once

#include <functional>

#include "zpk/matrix.hpp"

namespace zpk {

// Visit every r x c matrix over Z/p^k in lexicographic entry order
// (row-major digits, entry (0,0) fastest). Throws std::invalid_argument
// when the space size (p^k)^(r*c) exceeds cap. fn returning false stops
// the sweep early.
void for_each_matrix(Index r, Index c, const Modulus& m, Nat cap,
                     const std::function<bool(const ResidueMatrix&)>& fn);

// Same sweep restricted to invertible square matrices.
void for_each_invertible(Index n, const Modulus& m, Nat cap,
                         const std::function<bool(const ResidueMatrix&)>& fn);

// |GL(n, Z/p^k)| by exhaustive count (cap guards the ambient space).
Nat count_invertible(Index n, const Modulus& m, Nat cap);

// |GL(n, Z/p^k)| = p^((k-1) n^2) * prod_{i<n} (p^n - p^i).
Nat gl_order(Index n, const Modulus& m);

}  // namespace zpk
