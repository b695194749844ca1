#pragma once

#include <vector>

#include "zpk/coset.hpp"
#include "zpk/matrix.hpp"

namespace zpk {

// Tuple (g^(1), ..., g^(n)) over a shared modulus. The diagonal depth
// subgroups act by one (u, v) on every part simultaneously.
struct TupleElement {
  std::vector<GroupElement> parts;

  Index size() const { return static_cast<Index>(parts.size()); }
  const Modulus& mod() const;
};

bool operator==(const TupleElement& a, const TupleElement& b);
inline bool operator!=(const TupleElement& a, const TupleElement& b) { return !(a == b); }

TupleElement identity_tuple(Index n, const Modulus& m);

// Double coset: all tuples (u g^(1) v, ..., u g^(n) v) with u fixing the
// first `alpha` coordinates and v the first `gamma`.
struct TrainCoset {
  Index alpha = 0;
  Index gamma = 0;
  TupleElement rep;
};

TrainCoset identity_train_coset(Index n, Index depth, const Modulus& m);

// How the two residual index copies merge into one sequence.
enum class Interleave { stack, riffle };

// Representative of the product coset. Each left part is blocked with rows
// split at alpha and columns at beta, each right part with rows at beta and
// columns at gamma, and the blocks assemble into
//   [[a1 a2, b1, a1 b2],
//    [c1 a2, d1, c1 b2],
//    [c2,    0,  d2  ]]
// on one window shared by all parts. The active block extents are
// T1 = max(alpha, beta, left windows) and T2 = max(beta, gamma, right
// windows); beyond them both residual copies continue as identity, so the
// assembled window is T1 + T2 - beta. `stack` lays the two copies out in
// order; `riffle` alternates them. The variants differ by permutations
// fixing the heads, hence land in the same double coset.
TupleElement circ_representative(const TupleElement& g1, const TupleElement& g2, Index alpha,
                                 Index beta, Index gamma, Interleave il = Interleave::stack);

// Window-reduced representative of the same coset: cancels coordinate pairs
// at or beyond max(alpha, gamma) that every part swaps cleanly (one
// right-multiplication by the transposition, legal in the right depth
// subgroup), then moves coordinates on which every part acts as the
// identity to the tail (a diagonal permutation conjugation) and trims.
TrainCoset trimmed(const TrainCoset& t);

// Product of composable cosets (a.gamma == b.alpha) via circ_representative,
// returned trimmed.
TrainCoset train_product(const TrainCoset& a, const TrainCoset& b,
                         Interleave il = Interleave::stack);

// Equality of cosets at equal depths: one (u, v) must intertwine all parts.
EqResult train_coset_eq(const TrainCoset& a, const TrainCoset& b, const SearchBudget& budget = {});

struct StabilizationResult {
  bool stabilized = false;
  Index j_star = 0;            // first index whose coset persists through j_max
  TrainCoset stable;           // coset at j_star
  std::vector<Decision> steps;  // comparison of consecutive terms j vs j+1
};

// Scans the cosets of (g1 theta_j g2), j = 0..j_max, with theta at the
// middle depth acting diagonally on all parts, and reports the first index
// from which the coset stops changing through j_max. `stabilized` is false
// when the tail cannot be certified: a change at the last step, or an
// undecided comparison after the last change.
StabilizationResult stabilization_limit(const TrainCoset& a, const TrainCoset& b, Index j_max,
                                        const SearchBudget& budget = {});

// Scan length past which the swap only touches identity padding.
Index default_j_max(const TrainCoset& a, const TrainCoset& b);

// Compares (a b) c with a (b c).
EqResult associativity_check(const TrainCoset& a, const TrainCoset& b, const TrainCoset& c,
                             const SearchBudget& budget = {});

}  // namespace zpk
