#include "zpk/matrix.hpp"

#include <stdexcept>
#include <string>

namespace zpk {

namespace {

void require_same_mod(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (!(a.mod() == b.mod()))
    throw std::invalid_argument("matrices from different rings do not interoperate");
}

void require_same_shape(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shapes differ");
}

}  // namespace

ResidueMatrix::ResidueMatrix(MatN entries, Modulus m) : e_(std::move(entries)), m_(m) {
  const Nat s = m_.size();
  e_ = e_.unaryExpr([s](Nat x) { return x % s; });
}

ResidueMatrix ResidueMatrix::zero(Index rows, Index cols, Modulus m) {
  return ResidueMatrix(MatN::Zero(rows, cols), m);
}

ResidueMatrix ResidueMatrix::identity(Index n, Modulus m) {
  return ResidueMatrix(MatN::Identity(n, n), m);
}

ResidueMatrix ResidueMatrix::block(Index i, Index j, Index r, Index c) const {
  return ResidueMatrix(e_.block(i, j, r, c), m_);
}

void ResidueMatrix::set_block(Index i, Index j, const ResidueMatrix& b) {
  require_same_mod(*this, b);
  e_.block(i, j, b.rows(), b.cols()) = b.entries();
}

ResidueMatrix operator+(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_mod(a, b);
  require_same_shape(a, b);
  return ResidueMatrix(a.entries() + b.entries(), a.mod());
}

ResidueMatrix operator-(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_mod(a, b);
  require_same_shape(a, b);
  const Nat s = a.mod().size();
  MatN shifted = b.entries().unaryExpr([s](Nat x) { return s - x; });
  return ResidueMatrix(a.entries() + shifted, a.mod());
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  require_same_mod(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimensions differ");
  // entries < 2^20 and inner dimension < 2^24, so the plain integer
  // product cannot overflow before reduction
  MatN prod = a.entries() * b.entries();
  return ResidueMatrix(std::move(prod), a.mod());
}

ResidueMatrix operator-(const ResidueMatrix& a) {
  const Nat s = a.mod().size();
  return ResidueMatrix(a.entries().unaryExpr([s](Nat x) { return s - x; }), a.mod());
}

bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
  return a.mod() == b.mod() && a.rows() == b.rows() && a.cols() == b.cols() &&
         a.entries() == b.entries();
}

ResidueMatrix transposed(const ResidueMatrix& a) {
  return ResidueMatrix(a.entries().transpose(), a.mod());
}

Index fp_rank(const ResidueMatrix& a) {
  const Nat p = a.mod().p();
  Modulus fp(p, 1);
  MatN w = a.entries().unaryExpr([p](Nat x) { return x % p; });
  Index rank = 0;
  for (Index col = 0; col < w.cols() && rank < w.rows(); ++col) {
    Index pivot = -1;
    for (Index i = rank; i < w.rows(); ++i)
      if (w(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    w.row(rank).swap(w.row(pivot));
    Nat inv = unit_inverse(w(rank, col), fp);
    for (Index j = col; j < w.cols(); ++j) w(rank, j) = (w(rank, j) * inv) % p;
    for (Index i = 0; i < w.rows(); ++i) {
      if (i == rank || w(i, col) == 0) continue;
      Nat f = w(i, col);
      for (Index j = col; j < w.cols(); ++j) w(i, j) = (w(i, j) + (p - f) * w(rank, j)) % p;
    }
    ++rank;
  }
  return rank;
}

bool is_invertible(const ResidueMatrix& a) {
  return a.rows() == a.cols() && fp_rank(a) == a.rows();
}

ResidueMatrix inverse(const ResidueMatrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse: matrix is not square");
  const Modulus& m = a.mod();
  const Index n = a.rows();
  MatN w = a.entries();
  MatN inv = MatN::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index i = col; i < n; ++i)
      if (is_unit(w(i, col), m)) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      throw std::domain_error("inverse: not invertible over Z/p^k (rank mod p is " +
                              std::to_string(fp_rank(a)) + " of " + std::to_string(n) + ")");
    w.row(col).swap(w.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    Nat piv_inv = unit_inverse(w(col, col), m);
    for (Index j = 0; j < n; ++j) {
      w(col, j) = mul_mod(w(col, j), piv_inv, m);
      inv(col, j) = mul_mod(inv(col, j), piv_inv, m);
    }
    for (Index i = 0; i < n; ++i) {
      if (i == col) continue;
      Nat f = w(i, col);
      if (f == 0) continue;
      Nat nf = neg_mod(f, m);
      for (Index j = 0; j < n; ++j) {
        w(i, j) = add_mod(w(i, j), mul_mod(nf, w(col, j), m), m);
        inv(i, j) = add_mod(inv(i, j), mul_mod(nf, inv(col, j), m), m);
      }
    }
  }
  return ResidueMatrix(std::move(inv), m);
}

Nat det(const ResidueMatrix& a) {
  if (a.rows() != a.cols()) throw std::domain_error("det: matrix is not square");
  const Modulus& m = a.mod();
  const Index n = a.rows();
  MatN w = a.entries();
  bool negate = false;
  for (Index t = 0; t < n; ++t) {
    // minimal-valuation pivot in the remaining submatrix
    Index pi = -1, pj = -1;
    unsigned best = m.k() + 1;
    for (Index i = t; i < n; ++i)
      for (Index j = t; j < n; ++j) {
        unsigned v = valuation(w(i, j), m);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best > m.k()) break;  // all-zero tail, determinant 0
    if (pi != t) {
      w.row(t).swap(w.row(pi));
      negate = !negate;
    }
    if (pj != t) {
      w.col(t).swap(w.col(pj));
      negate = !negate;
    }
    for (Index i = t + 1; i < n; ++i) {
      if (w(i, t) == 0) continue;
      Nat f = divide_exact(w(i, t), w(t, t), m);
      Nat nf = neg_mod(f, m);
      for (Index j = t; j < n; ++j) w(i, j) = add_mod(w(i, j), mul_mod(nf, w(t, j), m), m);
    }
  }
  Nat d = 1;
  for (Index t = 0; t < n; ++t) d = mul_mod(d, w(t, t), m);
  return negate ? neg_mod(d, m) : d;
}

GroupElement::GroupElement(ResidueMatrix core) : core_(std::move(core)) {
  if (core_.rows() != core_.cols())
    throw std::domain_error("group element: window must be square");
  if (!is_invertible(core_))
    throw std::domain_error("group element: core not invertible over Z/p^k (rank mod p is " +
                            std::to_string(fp_rank(core_)) + " of " +
                            std::to_string(core_.rows()) + ")");
}

GroupElement GroupElement::identity(Modulus m, Index window) {
  return GroupElement(ResidueMatrix::identity(window, m));
}

Nat GroupElement::entry(Index i, Index j) const {
  const Index n = window();
  if (i < n && j < n) return core_(i, j);
  return i == j ? 1 : 0;
}

ResidueMatrix padded_core(const GroupElement& g, Index n) {
  const Index w = g.window();
  if (n <= w) return g.core();
  ResidueMatrix out = ResidueMatrix::identity(n, g.mod());
  out.set_block(0, 0, g.core());
  return out;
}

GroupElement padded(const GroupElement& g, Index n) { return GroupElement(padded_core(g, n)); }

GroupElement trim_identity_tail(const GroupElement& g) {
  Index n = g.window();
  while (n > 0) {
    bool trivial = g.core()(n - 1, n - 1) == 1;
    for (Index t = 0; trivial && t < n - 1; ++t)
      trivial = g.core()(n - 1, t) == 0 && g.core()(t, n - 1) == 0;
    if (!trivial) break;
    --n;
  }
  return GroupElement(g.core().block(0, 0, n, n));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (!(a.mod() == b.mod()))
    throw std::invalid_argument("group elements from different rings do not interoperate");
  const Index n = std::max(a.window(), b.window());
  return GroupElement(padded_core(a, n) * padded_core(b, n));
}

GroupElement inverse(const GroupElement& g) { return GroupElement(inverse(g.core())); }

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (!(a.mod() == b.mod())) return false;
  const Index n = std::max(a.window(), b.window());
  return padded_core(a, n) == padded_core(b, n);
}

GroupElement theta(Index j, Index alpha, const Modulus& m) {
  if (j < 0 || alpha < 0) throw std::invalid_argument("theta: block sizes must be nonnegative");
  ResidueMatrix c = ResidueMatrix::zero(alpha + 2 * j, alpha + 2 * j, m);
  for (Index i = 0; i < alpha; ++i) c.set(i, i, 1);
  for (Index t = 0; t < j; ++t) {
    c.set(alpha + t, alpha + j + t, 1);
    c.set(alpha + j + t, alpha + t, 1);
  }
  return GroupElement(std::move(c));
}

GroupElement permutation_embed(const std::vector<Index>& sigma, const Modulus& m) {
  const Index n = static_cast<Index>(sigma.size());
  std::vector<bool> seen(sigma.size(), false);
  for (Index v : sigma) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("permutation_embed: images are not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
  ResidueMatrix c = ResidueMatrix::zero(n, n, m);
  for (Index j = 0; j < n; ++j) c.set(sigma[static_cast<size_t>(j)], j, 1);
  return GroupElement(std::move(c));
}

ResidueMatrix block_embed(const ResidueMatrix& inner, Index offset, Index window) {
  if (inner.rows() != inner.cols()) throw std::invalid_argument("block_embed: inner block must be square");
  if (offset + inner.rows() > window) throw std::invalid_argument("block_embed: block exceeds window");
  ResidueMatrix out = ResidueMatrix::identity(window, inner.mod());
  out.set_block(offset, offset, inner);
  return out;
}

PadicNorm metric_d(const GroupElement& a, const GroupElement& b) {
  if (!(a.mod() == b.mod()))
    throw std::invalid_argument("group elements from different rings do not interoperate");
  const Modulus& m = a.mod();
  const Index n = std::max(a.window(), b.window());
  ResidueMatrix diff = padded_core(a, n) - padded_core(b, n);
  PadicNorm best = PadicNorm::zero(m.p());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      PadicNorm e = norm_of(diff(i, j), m);
      if (best < e) best = e;
    }
  return best;
}

}  // namespace zpk
