#include "zpk/orbit.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace zpk {

namespace {

std::vector<Nat> canonical(std::vector<Nat> coords, const Modulus& m) {
  for (Nat& x : coords) x %= m.size();
  return coords;
}

std::vector<Nat> without_trailing_zeros(std::vector<Nat> coords) {
  while (!coords.empty() && coords.back() == 0) coords.pop_back();
  return coords;
}

}  // namespace

VectorFin make_vector(std::vector<Nat> coords, const Modulus& m) {
  return VectorFin{Flavor::vector, m, canonical(std::move(coords), m)};
}

VectorFin make_covector(std::vector<Nat> coords, const Modulus& m) {
  return VectorFin{Flavor::covector, m, canonical(std::move(coords), m)};
}

VectorFin trimmed(const VectorFin& v) {
  return VectorFin{v.flavor, v.mod, without_trailing_zeros(v.coords)};
}

bool operator==(const VectorFin& a, const VectorFin& b) {
  return a.flavor == b.flavor && a.mod == b.mod &&
         without_trailing_zeros(a.coords) == without_trailing_zeros(b.coords);
}

Nat pairing(const VectorFin& covector, const VectorFin& vec) {
  if (covector.flavor != Flavor::covector || vec.flavor != Flavor::vector)
    throw std::invalid_argument("pairing: needs a covector and a vector");
  if (!(covector.mod == vec.mod)) throw std::invalid_argument("pairing: moduli differ");
  const size_t n = std::min(covector.coords.size(), vec.coords.size());
  Nat acc = 0;
  for (size_t i = 0; i < n; ++i)
    acc = add_mod(acc, mul_mod(covector.coords[i], vec.coords[i], covector.mod), covector.mod);
  return acc;
}

bool operator==(const OrbitState& a, const OrbitState& b) {
  return a.vectors == b.vectors && a.covectors == b.covectors;
}

OrbitState act(const GroupElement& g, const OrbitState& s) {
  const Modulus& m = g.mod();
  for (const VectorFin& v : s.vectors)
    if (!(v.mod == m) || v.flavor != Flavor::vector)
      throw std::invalid_argument("act: bad vector entry");
  for (const VectorFin& w : s.covectors)
    if (!(w.mod == m) || w.flavor != Flavor::covector)
      throw std::invalid_argument("act: bad covector entry");

  Index span = trim_identity_tail(g).window();
  for (const VectorFin& v : s.vectors)
    span = std::max(span, static_cast<Index>(v.coords.size()));
  for (const VectorFin& w : s.covectors)
    span = std::max(span, static_cast<Index>(w.coords.size()));

  const ResidueMatrix core = padded_core(g, span);
  const ResidueMatrix core_inv = inverse(core);

  OrbitState out;
  out.vectors.reserve(s.vectors.size());
  out.covectors.reserve(s.covectors.size());
  for (const VectorFin& v : s.vectors) {
    std::vector<Nat> c(static_cast<size_t>(span), 0);
    for (Index j = 0; j < span; ++j) {
      Nat acc = 0;
      for (Index i = 0; i < static_cast<Index>(v.coords.size()); ++i)
        acc = add_mod(acc, mul_mod(v.coords[static_cast<size_t>(i)], core(i, j), m), m);
      c[static_cast<size_t>(j)] = acc;
    }
    out.vectors.push_back(trimmed(VectorFin{Flavor::vector, m, std::move(c)}));
  }
  for (const VectorFin& w : s.covectors) {
    std::vector<Nat> c(static_cast<size_t>(span), 0);
    for (Index i = 0; i < span; ++i) {
      Nat acc = 0;
      for (Index j = 0; j < static_cast<Index>(w.coords.size()); ++j)
        acc = add_mod(acc, mul_mod(core_inv(i, j), w.coords[static_cast<size_t>(j)], m), m);
      c[static_cast<size_t>(i)] = acc;
    }
    out.covectors.push_back(trimmed(VectorFin{Flavor::covector, m, std::move(c)}));
  }
  return out;
}

std::vector<GroupElement> gl_generators(Index n, const Modulus& m) {
  if (n < 1) throw std::invalid_argument("generators: window must be positive");
  std::vector<GroupElement> gens;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      ResidueMatrix t = ResidueMatrix::identity(n, m);
      t.set(i, j, 1);
      gens.push_back(GroupElement(std::move(t)));
    }
  for (Index i = 0; i < n; ++i)
    for (Nat u = 2; u < m.size(); ++u) {
      if (!is_unit(u, m)) continue;
      ResidueMatrix d = ResidueMatrix::identity(n, m);
      d.set(i, i, u);
      gens.push_back(GroupElement(std::move(d)));
    }
  for (Index i = 0; i + 1 < n; ++i) {
    std::vector<Index> sigma(static_cast<size_t>(n));
    for (Index t = 0; t < n; ++t) sigma[static_cast<size_t>(t)] = t;
    std::swap(sigma[static_cast<size_t>(i)], sigma[static_cast<size_t>(i) + 1]);
    gens.push_back(permutation_embed(sigma, m));
  }
  return gens;
}

namespace {

struct StateCodec {
  Index dims;
  Nat radix;

  void decode(Nat id, std::vector<Nat>& digits) const {
    for (Index d = 0; d < dims; ++d) {
      digits[static_cast<size_t>(d)] = id % radix;
      id /= radix;
    }
  }
  Nat encode(const std::vector<Nat>& digits) const {
    Nat id = 0;
    for (Index d = dims; d-- > 0;) id = id * radix + digits[static_cast<size_t>(d)];
    return id;
  }
};

}  // namespace

Nat orbit_count(Index n_vectors, Index n_covectors, Index window, const Modulus& m,
                const OrbitBudget& budget) {
  if (n_vectors < 0 || n_covectors < 0 || window < 0)
    throw std::invalid_argument("orbit count: negative parameters");
  const Index dims = (n_vectors + n_covectors) * window;
  if (dims == 0) return 1;

  unsigned __int128 total = 1;
  for (Index d = 0; d < dims; ++d) {
    total *= m.size();
    if (total > budget.max_states)
      throw std::runtime_error("orbit count: state space exceeds the budget");
  }
  const Nat state_count = static_cast<Nat>(total);

  std::vector<ResidueMatrix> fwd, bwd;
  for (const GroupElement& g : gl_generators(std::max<Index>(window, 1), m)) {
    ResidueMatrix c = padded_core(g, window);
    bwd.push_back(inverse(c));
    fwd.push_back(std::move(c));
  }

  const StateCodec codec{dims, m.size()};
  std::vector<char> visited(static_cast<size_t>(state_count), 0);
  std::vector<Nat> digits(static_cast<size_t>(dims), 0), next(static_cast<size_t>(dims), 0);
  std::deque<Nat> queue;
  Nat orbits = 0;

  auto apply = [&](size_t gen, const std::vector<Nat>& in, std::vector<Nat>& out) {
    const ResidueMatrix& c = fwd[gen];
    const ResidueMatrix& ci = bwd[gen];
    for (Index t = 0; t < n_vectors; ++t) {
      const Index base = t * window;
      for (Index j = 0; j < window; ++j) {
        Nat acc = 0;
        for (Index i = 0; i < window; ++i)
          acc = add_mod(acc, mul_mod(in[static_cast<size_t>(base + i)], c(i, j), m), m);
        out[static_cast<size_t>(base + j)] = acc;
      }
    }
    for (Index t = 0; t < n_covectors; ++t) {
      const Index base = (n_vectors + t) * window;
      for (Index i = 0; i < window; ++i) {
        Nat acc = 0;
        for (Index j = 0; j < window; ++j)
          acc = add_mod(acc, mul_mod(ci(i, j), in[static_cast<size_t>(base + j)], m), m);
        out[static_cast<size_t>(base + i)] = acc;
      }
    }
  };

  for (Nat seed = 0; seed < state_count; ++seed) {
    if (visited[static_cast<size_t>(seed)]) continue;
    ++orbits;
    visited[static_cast<size_t>(seed)] = 1;
    queue.clear();
    queue.push_back(seed);
    while (!queue.empty()) {
      const Nat id = queue.front();
      queue.pop_front();
      codec.decode(id, digits);
      for (size_t gen = 0; gen < fwd.size(); ++gen) {
        apply(gen, digits, next);
        const Nat nid = codec.encode(next);
        if (!visited[static_cast<size_t>(nid)]) {
          visited[static_cast<size_t>(nid)] = 1;
          queue.push_back(nid);
        }
      }
    }
  }
  return orbits;
}

OrbitTable orbit_stabilization(Index n_vectors, Index n_covectors, Index window_lo,
                               Index window_hi, const Modulus& m, const OrbitBudget& budget) {
  if (window_lo < 0 || window_hi < window_lo)
    throw std::invalid_argument("orbit table: bad window range");
  OrbitTable table;
  for (Index w = window_lo; w <= window_hi; ++w)
    table.rows.push_back(OrbitRow{w, orbit_count(n_vectors, n_covectors, w, m, budget)});
  Index stable_from = window_lo;
  for (const OrbitRow& r : table.rows)
    if (r.count != table.rows.back().count) stable_from = r.window + 1;
  table.stable_from = stable_from;
  table.stabilized = stable_from < window_hi;
  return table;
}

}  // namespace zpk
