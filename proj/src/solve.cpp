#include "zpk/solve.hpp"

#include <numeric>
#include <stdexcept>

namespace zpk {

ColumnCompression compress_columns(const ResidueMatrix& a) {
  const Modulus& m = a.mod();
  const Index r = a.rows(), c = a.cols();
  MatN w = a.entries();
  MatN u = MatN::Identity(c, c);
  std::vector<Index> active(static_cast<size_t>(c));
  std::iota(active.begin(), active.end(), Index{0});
  std::vector<Index> locked;
  for (Index i = 0; i < r && !active.empty(); ++i) {
    size_t best_idx = 0;
    unsigned best = m.k() + 1;
    for (size_t t = 0; t < active.size(); ++t) {
      unsigned v = valuation(w(i, active[t]), m);
      if (v < best) {
        best = v;
        best_idx = t;
      }
    }
    if (best >= m.k()) continue;  // row is zero on active columns
    const Index piv = active[best_idx];
    for (size_t t = 0; t < active.size(); ++t) {
      const Index j = active[t];
      if (j == piv || w(i, j) == 0) continue;
      Nat f = neg_mod(divide_exact(w(i, j), w(i, piv), m), m);
      for (Index row = 0; row < r; ++row) w(row, j) = add_mod(w(row, j), mul_mod(f, w(row, piv), m), m);
      for (Index row = 0; row < c; ++row) u(row, j) = add_mod(u(row, j), mul_mod(f, u(row, piv), m), m);
    }
    locked.push_back(piv);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_idx));
  }
  // permute locked columns (in lock order) to the front
  std::vector<Index> order = locked;
  order.insert(order.end(), active.begin(), active.end());
  MatN up(c, c);
  for (Index t = 0; t < c; ++t) up.col(t) = u.col(order[static_cast<size_t>(t)]);
  return {ResidueMatrix(std::move(up), m), static_cast<Index>(locked.size())};
}

RowCompression compress_rows(const ResidueMatrix& a) {
  ColumnCompression cc = compress_columns(transposed(a));
  return {transposed(cc.u), cc.kept};
}

FpRankNormalForm fp_rank_normal_form(const ResidueMatrix& a) {
  const Modulus& m = a.mod();
  const Nat p = m.p();
  Modulus fp(p, 1);
  const Index r = a.rows(), c = a.cols();
  MatN w = a.entries().unaryExpr([p](Nat x) { return x % p; });
  MatN s = MatN::Identity(r, r);
  MatN t = MatN::Identity(c, c);
  Index rank = 0;
  while (true) {
    Index pi = -1, pj = -1;
    for (Index i = rank; i < r && pi < 0; ++i)
      for (Index j = rank; j < c; ++j)
        if (w(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    w.row(rank).swap(w.row(pi));
    s.row(rank).swap(s.row(pi));
    w.col(rank).swap(w.col(pj));
    t.col(rank).swap(t.col(pj));
    Nat inv = unit_inverse(w(rank, rank), fp);
    for (Index j = 0; j < c; ++j) w(rank, j) = (w(rank, j) * inv) % p;
    for (Index j = 0; j < r; ++j) s(rank, j) = (s(rank, j) * inv) % p;
    for (Index i = 0; i < r; ++i) {
      if (i == rank || w(i, rank) == 0) continue;
      Nat f = p - w(i, rank);
      for (Index j = 0; j < c; ++j) w(i, j) = (w(i, j) + f * w(rank, j)) % p;
      for (Index j = 0; j < r; ++j) s(i, j) = (s(i, j) + f * s(rank, j)) % p;
    }
    for (Index j = 0; j < c; ++j) {
      if (j == rank || w(rank, j) == 0) continue;
      Nat f = p - w(rank, j);
      for (Index i = 0; i < r; ++i) w(i, j) = (w(i, j) + f * w(i, rank)) % p;
      for (Index i = 0; i < c; ++i) t(i, j) = (t(i, j) + f * t(i, rank)) % p;
    }
    ++rank;
  }
  return {ResidueMatrix(std::move(s), m), ResidueMatrix(std::move(t), m), rank};
}

Nat AffineSolutions::count_capped(Nat cap) const {
  if (!consistent) return 0;
  Nat total = 1;
  for (const Direction& d : directions) {
    if (d.order != 0 && total > cap / d.order) return cap;
    total *= d.order;
  }
  return std::min(total, cap);
}

AffineSolutions solve_linear(const ResidueMatrix& lhs, const std::vector<Nat>& rhs) {
  const Modulus& m = lhs.mod();
  const Index r = lhs.rows(), c = lhs.cols();
  if (static_cast<Index>(rhs.size()) != r)
    throw std::invalid_argument("solve_linear: rhs length does not match rows");
  MatN w = lhs.entries();
  MatN right = MatN::Identity(c, c);
  std::vector<Nat> b = rhs;
  for (Nat& x : b) x %= m.size();

  std::vector<unsigned> pivot_val;
  const Index tmax = std::min(r, c);
  while (static_cast<Index>(pivot_val.size()) < tmax) {
    const Index t = static_cast<Index>(pivot_val.size());
    Index pi = -1, pj = -1;
    unsigned best = m.k();
    for (Index i = t; i < r; ++i)
      for (Index j = t; j < c; ++j) {
        unsigned v = valuation(w(i, j), m);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (best == 0) break;
        }
      }
    if (pi < 0) break;  // remaining block is zero
    w.row(t).swap(w.row(pi));
    std::swap(b[static_cast<size_t>(t)], b[static_cast<size_t>(pi)]);
    w.col(t).swap(w.col(pj));
    right.col(t).swap(right.col(pj));
    const Nat piv = w(t, t);
    for (Index i = t + 1; i < r; ++i) {
      if (w(i, t) == 0) continue;
      Nat f = neg_mod(divide_exact(w(i, t), piv, m), m);
      for (Index j = t; j < c; ++j) w(i, j) = add_mod(w(i, j), mul_mod(f, w(t, j), m), m);
      b[static_cast<size_t>(i)] = add_mod(b[static_cast<size_t>(i)], mul_mod(f, b[static_cast<size_t>(t)], m), m);
    }
    for (Index j = t + 1; j < c; ++j) {
      if (w(t, j) == 0) continue;
      Nat f = neg_mod(divide_exact(w(t, j), piv, m), m);
      for (Index i = 0; i < r; ++i) w(i, j) = add_mod(w(i, j), mul_mod(f, w(i, t), m), m);
      for (Index i = 0; i < c; ++i) right(i, j) = add_mod(right(i, j), mul_mod(f, right(i, t), m), m);
    }
    // normalize the pivot to a pure power of p (scale the column by the
    // inverse of its unit part)
    const unsigned v = valuation(piv, m);
    Nat unit = piv / m.pow_p(v);
    if (unit != 1) {
      Nat inv = unit_inverse(unit, m);
      for (Index i = 0; i < r; ++i) w(i, t) = mul_mod(w(i, t), inv, m);
      for (Index i = 0; i < c; ++i) right(i, t) = mul_mod(right(i, t), inv, m);
    }
    pivot_val.push_back(v);
  }

  const Index rank = static_cast<Index>(pivot_val.size());
  AffineSolutions out;
  out.ring = m.size();
  for (Index i = rank; i < r; ++i)
    if (b[static_cast<size_t>(i)] != 0) return out;  // inconsistent

  std::vector<Nat> y(static_cast<size_t>(c), 0);
  for (Index t = 0; t < rank; ++t) {
    const unsigned v = pivot_val[static_cast<size_t>(t)];
    if (valuation(b[static_cast<size_t>(t)], m) < v) return out;  // p^v y = b unsolvable
    y[static_cast<size_t>(t)] = b[static_cast<size_t>(t)] / m.pow_p(v);
  }
  out.consistent = true;

  auto col_times = [&](Index col, Nat scale) {
    std::vector<Nat> vec(static_cast<size_t>(c));
    for (Index i = 0; i < c; ++i) vec[static_cast<size_t>(i)] = mul_mod(right(i, col), scale, m);
    return vec;
  };

  out.particular.assign(static_cast<size_t>(c), 0);
  for (Index i = 0; i < c; ++i) {
    Nat acc = 0;
    for (Index t = 0; t < c; ++t) acc = add_mod(acc, mul_mod(right(i, t), y[static_cast<size_t>(t)], m), m);
    out.particular[static_cast<size_t>(i)] = acc;
  }
  for (Index t = 0; t < rank; ++t) {
    const unsigned v = pivot_val[static_cast<size_t>(t)];
    if (v == 0) continue;  // determined coordinate
    out.directions.push_back({col_times(t, m.pow_p(m.k() - v)), m.pow_p(v)});
  }
  for (Index t = rank; t < c; ++t) out.directions.push_back({col_times(t, 1), m.size()});
  return out;
}

ResidueMatrix extend_rows_to_invertible(const ResidueMatrix& top) {
  const Index n = top.cols();
  const Index t = top.rows();
  if (t > n || fp_rank(top) != t)
    throw std::invalid_argument("extend_rows_to_invertible: rows are not independent mod p");
  ResidueMatrix b = ResidueMatrix::zero(n, n, top.mod());
  b.set_block(0, 0, top);
  Index have = t;
  for (Index j = 0; j < n && have < n; ++j) {
    b.set(have, j, 1);
    if (fp_rank(b.block(0, 0, have + 1, n)) == have + 1)
      ++have;
    else
      b.set(have, j, 0);
  }
  if (have < n) throw std::logic_error("extend_rows_to_invertible: completion failed");
  return b;
}

EnumerationStats for_each_solution(const AffineSolutions& sols, Nat budget,
                                   const std::function<bool(const std::vector<Nat>&)>& fn) {
  if (!sols.consistent) return {true, 0};
  const Nat ring = sols.ring;
  const size_t n = sols.particular.size();
  std::vector<Nat> digits(sols.directions.size(), 0);
  std::vector<Nat> x = sols.particular;
  Nat visited = 0;
  while (true) {
    if (visited >= budget) return {false, visited};
    ++visited;
    if (!fn(x)) return {false, visited};
    // mixed-radix increment; cheap step on the lowest digit, exact
    // recomputation on carries
    size_t i = 0;
    for (; i < digits.size(); ++i) {
      if (digits[i] + 1 < sols.directions[i].order) {
        ++digits[i];
        break;
      }
      digits[i] = 0;
    }
    if (i == digits.size()) return {true, visited};
    if (i == 0) {
      const auto& step = sols.directions[0].step;
      for (size_t t = 0; t < n; ++t) x[t] = (x[t] + step[t]) % ring;
    } else {
      x = sols.particular;
      for (size_t d = 0; d < digits.size(); ++d) {
        if (digits[d] == 0) continue;
        for (size_t t = 0; t < n; ++t) x[t] = (x[t] + digits[d] * sols.directions[d].step[t]) % ring;
      }
    }
  }
}

}  // namespace zpk
