#pragma once

#include <optional>
#include <vector>

#include "zpk/matrix.hpp"

namespace zpk {

// Double coset K g K for K = GL^[m], stored by depth and representative.
struct DoubleCoset {
  Index m;
  GroupElement rep;
};

// q * g * r = out with q, r in GL^[m] and window(out) <= 3m.
// Verification needs only multiplication and the membership predicate.
struct ReductionCertificate {
  GroupElement q;
  GroupElement r;
  GroupElement out;
};

ReductionCertificate normalize_to_window(const GroupElement& g, Index m);

// Re-check a certificate independently of how it was produced. Returns
// false and fills `why` (when non-null) on the first violated clause.
bool verify_certificate(const GroupElement& g, Index m, const ReductionCertificate& cert,
                        std::string* why = nullptr);

// Given g1 = q g2 r with q, r in GL^[m] and g1, g2 in GL(M) for
// M = max(3m, windows), produce conjugators with window <= m + 2(M - m)
// satisfying the same equation. Pairs already inside the bound are
// returned unchanged.
struct LocalizedPair {
  GroupElement q;
  GroupElement r;
};
LocalizedPair localize_conjugators(const GroupElement& g1, const GroupElement& g2, Index m,
                                   const GroupElement& q, const GroupElement& r);

enum class Decision { yes, no, undecided };

struct SearchBudget {
  Nat max_candidates = Nat{1} << 20;
  // enumeration window; 0 selects the default for the operation
  Index window = 0;
};

struct CosetWitness {
  GroupElement u;
  GroupElement v;
};

struct EqResult {
  Decision decision = Decision::undecided;
  std::optional<CosetWitness> witness;
  Index window = 0;   // enumeration window actually used
  Nat examined = 0;   // candidates checked against invertibility
  bool exhausted = false;
};

// Exhaustive search for u in K^alpha, v in K^gamma with u a_l = b_l v for
// every part. The search eliminates u through part 0 and sweeps the affine
// solution family of the remaining linear system over Z/p^k inside
// GL(window); `no` therefore means no witness exists within that window.
// Large families are probed with deterministic random samples before the
// sweep, so witnesses in families far beyond the budget are still found.
EqResult conjugate_tuple_search(const std::vector<GroupElement>& a,
                                const std::vector<GroupElement>& b, Index alpha, Index gamma,
                                const SearchBudget& budget);

// Equality of double cosets at equal depth. Representatives are normalized
// to window 3m first; the default search window m + 2(M - m) with
// M = max(3m, normalized windows) makes `no` unconditional.
EqResult coset_eq(const DoubleCoset& a, const DoubleCoset& b, const SearchBudget& budget = {});

// All elements of GL(n) lying in the coset (bounded exhaustive sweep).
std::vector<GroupElement> coset_intersection(const DoubleCoset& a, Index n,
                                             const SearchBudget& budget = {});

enum class DistMethod { inf, hausdorff };

// Distance between double cosets through their GL(3m) intersections:
// inf takes the infimum of d(g, z) over the other intersection; hausdorff
// the symmetric sup-inf. The two coincide on this family.
PadicNorm coset_dist(const DoubleCoset& a, const DoubleCoset& b, DistMethod method,
                     const SearchBudget& budget = {});

}  // namespace zpk
