#pragma once

#include <functional>
#include <vector>

#include "zpk/matrix.hpp"

namespace zpk {

// Invertible U with A * U = [T | 0] where T keeps `kept` <= min(rows, cols)
// columns. Elimination uses minimal-valuation pivots; division by a pivot
// is exact because the pivot divides every remaining entry of its row.
struct ColumnCompression {
  ResidueMatrix u;
  Index kept;
};
ColumnCompression compress_columns(const ResidueMatrix& a);

// Invertible V with V * A = [S over 0], S keeping `kept` rows.
struct RowCompression {
  ResidueMatrix v;
  Index kept;
};
RowCompression compress_rows(const ResidueMatrix& a);

// Invertible S, T over Z/p^k (lifted 0/1..p-1 entries) with
// S * A * T = diag(1_rank, 0) mod p.
struct FpRankNormalForm {
  ResidueMatrix s;
  ResidueMatrix t;
  Index rank;
};
FpRankNormalForm fp_rank_normal_form(const ResidueMatrix& a);

// Solution set of a linear system over Z/p^k as an affine family:
// x = particular + sum_i t_i * directions[i].step with t_i in
// [0, directions[i].order). The family enumerates every solution
// exactly once.
struct AffineSolutions {
  bool consistent = false;
  Nat ring = 1;  // p^k, for canonical stepping during enumeration
  std::vector<Nat> particular;
  struct Direction {
    std::vector<Nat> step;
    Nat order;
  };
  std::vector<Direction> directions;

  // total solution count, saturated at cap
  Nat count_capped(Nat cap) const;
};

// Smith-style elimination for lhs * x = rhs over Z/p^k.
AffineSolutions solve_linear(const ResidueMatrix& lhs, const std::vector<Nat>& rhs);

// Invertible square matrix whose first rows are `top` (which must have
// full row rank mod p), completed greedily with standard basis rows.
ResidueMatrix extend_rows_to_invertible(const ResidueMatrix& top);

struct EnumerationStats {
  bool exhausted;
  Nat visited;
};

// Visit solutions in a fixed deterministic order until fn returns false
// or budget is exceeded. exhausted reports whether the family was fully
// swept; any early stop, whether by fn or by budget, clears it.
EnumerationStats for_each_solution(const AffineSolutions& sols, Nat budget,
                                   const std::function<bool(const std::vector<Nat>&)>& fn);

}  // namespace zpk
