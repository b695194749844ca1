#include "zpk/enumerate.hpp"

#include <stdexcept>

namespace zpk {

void for_each_matrix(Index r, Index c, const Modulus& m, Nat cap,
                     const std::function<bool(const ResidueMatrix&)>& fn) {
  const Nat s = m.size();
  Nat total = 1;
  for (Index t = 0; t < r * c; ++t) {
    if (total > cap / s) throw std::invalid_argument("for_each_matrix: space exceeds cap");
    total *= s;
  }
  MatN w = MatN::Zero(r, c);
  while (true) {
    if (!fn(ResidueMatrix(w, m))) return;
    Index t = 0;
    for (; t < r * c; ++t) {
      Nat& x = w(t / c, t % c);
      if (x + 1 < s) {
        ++x;
        break;
      }
      x = 0;
    }
    if (t == r * c) return;
  }
}

void for_each_invertible(Index n, const Modulus& m, Nat cap,
                         const std::function<bool(const ResidueMatrix&)>& fn) {
  for_each_matrix(n, n, m, cap, [&](const ResidueMatrix& a) {
    if (!is_invertible(a)) return true;
    return fn(a);
  });
}

Nat count_invertible(Index n, const Modulus& m, Nat cap) {
  Nat count = 0;
  for_each_invertible(n, m, cap, [&](const ResidueMatrix&) {
    ++count;
    return true;
  });
  return count;
}

Nat gl_order(Index n, const Modulus& m) {
  using Wide = unsigned __int128;
  const Wide p = m.p();
  Wide pn = 1;
  for (Index i = 0; i < n; ++i) pn *= p;
  Wide acc = 1;
  Wide pi = 1;
  auto mul_checked = [](Wide a, Wide b) {
    Wide r = a * b;
    if (b != 0 && r / b != a) throw std::overflow_error("gl_order: result exceeds 128 bits");
    return r;
  };
  for (Index i = 0; i < n; ++i) {
    acc = mul_checked(acc, pn - pi);
    pi *= p;
  }
  for (unsigned e = 1; e < m.k(); ++e)
    for (Index t = 0; t < n * n; ++t) acc = mul_checked(acc, p);
  if (acc > static_cast<Wide>(~Nat{0})) throw std::overflow_error("gl_order: result exceeds 64 bits");
  return static_cast<Nat>(acc);
}

}  // namespace zpk
