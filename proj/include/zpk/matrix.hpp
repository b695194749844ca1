#pragma once

#include <Eigen/Core>
#include <vector>

#include "zpk/residue.hpp"

namespace zpk {

using Index = Eigen::Index;
using MatN = Eigen::Matrix<Nat, Eigen::Dynamic, Eigen::Dynamic>;

// Dense matrix over Z/p^k: Eigen storage with canonical entries in
// [0, p^k) plus the Modulus carried once. Shapes may be rectangular;
// binary operations require equal moduli.
class ResidueMatrix {
public:
  ResidueMatrix(MatN entries, Modulus m);

  static ResidueMatrix zero(Index rows, Index cols, Modulus m);
  static ResidueMatrix identity(Index n, Modulus m);

  const MatN& entries() const { return e_; }
  const Modulus& mod() const { return m_; }
  Index rows() const { return e_.rows(); }
  Index cols() const { return e_.cols(); }

  Nat operator()(Index i, Index j) const { return e_(i, j); }
  void set(Index i, Index j, Nat v) { e_(i, j) = reduce(v, m_); }
  // adds v into (i, j)
  void accumulate(Index i, Index j, Nat v) { e_(i, j) = add_mod(e_(i, j), v, m_); }

  ResidueMatrix block(Index i, Index j, Index r, Index c) const;
  void set_block(Index i, Index j, const ResidueMatrix& b);

private:
  MatN e_;
  Modulus m_;
};

ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
ResidueMatrix operator-(const ResidueMatrix& a);
bool operator==(const ResidueMatrix& a, const ResidueMatrix& b);

ResidueMatrix transposed(const ResidueMatrix& a);

// Rank of the reduction mod p over the field F_p.
Index fp_rank(const ResidueMatrix& a);

// A square matrix over the local ring Z/p^k is invertible iff its
// reduction mod p is invertible over F_p.
bool is_invertible(const ResidueMatrix& a);

// Exact inverse via unit-pivot Gauss-Jordan elimination.
// Throws std::domain_error with the mod-p rank when singular.
ResidueMatrix inverse(const ResidueMatrix& a);

// Exact determinant via minimal-valuation pivoting; row/column swaps only
// change sign, elimination steps use exact division by the pivot.
Nat det(const ResidueMatrix& a);

// Element of the group of invertible finitary matrices: equal to the
// identity outside a finite window N. Stored as the N x N core; the
// infinite part is implicit. Construction validates invertibility.
class GroupElement {
public:
  explicit GroupElement(ResidueMatrix core);

  static GroupElement identity(Modulus m, Index window = 0);

  Index window() const { return core_.rows(); }
  const ResidueMatrix& core() const { return core_; }
  const Modulus& mod() const { return core_.mod(); }

  // entry of the infinite matrix, identity padding beyond the window
  Nat entry(Index i, Index j) const;

private:
  ResidueMatrix core_;
};

// core extended with identity rows/columns to window max(N, window(g))
ResidueMatrix padded_core(const GroupElement& g, Index n);
GroupElement padded(const GroupElement& g, Index n);

// smallest window holding every non-identity entry
GroupElement trim_identity_tail(const GroupElement& g);

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
// equality as infinite matrices (modulo identity padding)
bool operator==(const GroupElement& a, const GroupElement& b);

// diag(1_alpha, [[0, 1_j], [1_j, 0]], 1, ...): the involution swapping the
// coordinate blocks alpha+1..alpha+j and alpha+j+1..alpha+2j.
GroupElement theta(Index j, Index alpha, const Modulus& m);

// 0/1 matrix of the finite permutation sigma (images, 0-based):
// column j carries its 1 in row sigma[j], so embed(s o t) = embed(s)*embed(t).
GroupElement permutation_embed(const std::vector<Index>& sigma, const Modulus& m);

// identity(window) with `inner` placed at diagonal offset
ResidueMatrix block_embed(const ResidueMatrix& inner, Index offset, Index window);

// sup-norm distance max_ij |a_ij - b_ij|; two-side invariant ultrametric.
PadicNorm metric_d(const GroupElement& a, const GroupElement& b);

}  // namespace zpk
