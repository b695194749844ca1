#pragma once

#include <vector>

#include "zpk/matrix.hpp"

namespace zpk {

enum class Flavor { vector, covector };

// Finitely supported sequence over the ring; equality ignores trailing zeros.
struct VectorFin {
  Flavor flavor = Flavor::vector;
  Modulus mod;
  std::vector<Nat> coords;  // canonical entries
};

VectorFin make_vector(std::vector<Nat> coords, const Modulus& m);
VectorFin make_covector(std::vector<Nat> coords, const Modulus& m);
VectorFin trimmed(const VectorFin& v);
bool operator==(const VectorFin& a, const VectorFin& b);
inline bool operator!=(const VectorFin& a, const VectorFin& b) { return !(a == b); }

// The pairing value w(v) of a covector against a vector.
Nat pairing(const VectorFin& covector, const VectorFin& vec);

// A collection of vectors and covectors moved simultaneously by the group:
// vectors by v -> v g (rows), covectors by w -> g^{-1} w (columns).
struct OrbitState {
  std::vector<VectorFin> vectors;
  std::vector<VectorFin> covectors;
};

bool operator==(const OrbitState& a, const OrbitState& b);
inline bool operator!=(const OrbitState& a, const OrbitState& b) { return !(a == b); }

OrbitState act(const GroupElement& g, const OrbitState& s);

// Elementary transvections 1 + E_ij, single-coordinate unit scalings, and
// adjacent transpositions: together they generate the full invertible group
// of the window.
std::vector<GroupElement> gl_generators(Index n, const Modulus& m);

struct OrbitBudget {
  Nat max_states = Nat{1} << 22;
};

// Number of orbits of the invertible matrices of the window on states made
// of the given numbers of vectors and covectors supported in the window,
// by breadth-first closure under gl_generators.
Nat orbit_count(Index n_vectors, Index n_covectors, Index window, const Modulus& m,
                const OrbitBudget& budget = {});

struct OrbitRow {
  Index window = 0;
  Nat count = 0;
};

// Orbit counts across a window range, with the first window from which the
// count stays constant through the end of the range. `stabilized` demands
// at least one confirming repeat.
struct OrbitTable {
  std::vector<OrbitRow> rows;
  bool stabilized = false;
  Index stable_from = 0;
};

OrbitTable orbit_stabilization(Index n_vectors, Index n_covectors, Index window_lo,
                               Index window_hi, const Modulus& m, const OrbitBudget& budget = {});

}  // namespace zpk
