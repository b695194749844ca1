#include <doctest.h>

#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "zpk/enumerate.hpp"
#include "zpk/matrix.hpp"
#include "zpk/orbit.hpp"
#include "zpk/rng.hpp"

using namespace zpk;

namespace {

std::vector<Nat> core_key(const GroupElement& g, Index n) {
  ResidueMatrix c = padded_core(g, n);
  std::vector<Nat> key;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) key.push_back(c(i, j));
  return key;
}

}  // namespace

TEST_CASE("vectors and covectors compare modulo trailing zeros") {
  const Modulus m(2, 2);
  CHECK(make_vector({1, 0, 0}, m) == make_vector({1}, m));
  CHECK(make_vector({1}, m) != make_vector({1, 2}, m));
  CHECK(make_vector({1}, m) != make_covector({1}, m));
  CHECK(trimmed(make_vector({0, 3, 0}, m)).coords == std::vector<Nat>{0, 3});
  CHECK(pairing(make_covector({1, 2}, m), make_vector({3, 1, 2}, m)) == 1);  // 3 + 2 mod 4
}

TEST_CASE("the action is a right action on vectors and inverse-left on covectors") {
  const Modulus m(2, 1);
  OrbitState s;
  s.vectors = {make_vector({1}, m)};
  s.covectors = {make_covector({1}, m)};
  const OrbitState moved = act(theta(1, 0, m), s);
  CHECK(moved.vectors[0] == make_vector({0, 1}, m));
  CHECK(moved.covectors[0] == make_covector({0, 1}, m));

  Rng rng(701);
  for (const Modulus& mod : {Modulus(2, 2), Modulus(3, 1)}) {
    for (int rep = 0; rep < 8; ++rep) {
      const GroupElement g = random_invertible(rng, 3, mod);
      const GroupElement h = random_invertible(rng, 4, mod);
      OrbitState st;
      st.vectors = {make_vector({rng.residue(mod), rng.residue(mod)}, mod),
                    make_vector({rng.residue(mod)}, mod)};
      st.covectors = {make_covector({rng.residue(mod), rng.residue(mod), rng.residue(mod)}, mod)};
      // composition law and identity
      CHECK(act(g * h, st) == act(h, act(g, st)));
      CHECK(act(GroupElement::identity(mod), st) == st);
      // the pairing between any covector and any vector is invariant
      const OrbitState mv = act(g, st);
      for (const VectorFin& w : st.covectors)
        for (size_t t = 0; t < st.vectors.size(); ++t)
          CHECK(pairing(w, st.vectors[t]) ==
                pairing(mv.covectors[0], mv.vectors[t]));
    }
  }
}

TEST_CASE("the generator set regenerates the whole invertible group") {
  for (const Modulus& m : {Modulus(2, 1), Modulus(3, 1), Modulus(2, 2)}) {
    const Index n = 2;
    const std::vector<GroupElement> gens = gl_generators(n, m);
    std::set<std::vector<Nat>> seen{core_key(GroupElement::identity(m, n), n)};
    std::deque<GroupElement> queue{GroupElement::identity(m, n)};
    while (!queue.empty()) {
      const GroupElement g = queue.front();
      queue.pop_front();
      for (const GroupElement& s : gens) {
        GroupElement next = g * s;
        if (seen.insert(core_key(next, n)).second) queue.push_back(next);
      }
    }
    CHECK(seen.size() == gl_order(n, m));
  }
}

TEST_CASE("single-vector orbit counts equal the valuation classes") {
  for (const Modulus& m : {Modulus(2, 1), Modulus(2, 2), Modulus(3, 1), Modulus(3, 2)}) {
    for (Index window = 1; window <= 3; ++window)
      CHECK(orbit_count(1, 0, window, m) == m.k() + 1);
  }
  // no moving parts: exactly one empty state
  CHECK(orbit_count(0, 0, 3, Modulus(2, 1)) == 1);
  CHECK(orbit_count(1, 0, 0, Modulus(2, 2)) == 1);
}

TEST_CASE("two-vector orbit counts match the configuration types over F_2") {
  const Modulus m(2, 1);
  // window 1 leaves no room for an independent pair
  CHECK(orbit_count(2, 0, 1, m) == 4);
  CHECK(orbit_count(2, 0, 2, m) == 5);
  CHECK(orbit_count(2, 0, 3, m) == 5);
}

TEST_CASE("vector-covector orbit counts match the pairing classification") {
  const Modulus m(2, 1);
  // zero/nonzero flags plus the pairing value; a nonzero orthogonal pair
  // needs two dimensions
  CHECK(orbit_count(1, 1, 1, m) == 4);
  CHECK(orbit_count(1, 1, 2, m) == 5);
  CHECK(orbit_count(1, 1, 3, m) == 5);
}

TEST_CASE("orbit counts never decrease with precision") {
  CHECK(orbit_count(1, 0, 2, Modulus(2, 2)) > orbit_count(1, 0, 2, Modulus(2, 1)));
  CHECK(orbit_count(1, 1, 2, Modulus(2, 2)) >= orbit_count(1, 1, 2, Modulus(2, 1)));
}

TEST_CASE("state budget violations are reported, not truncated") {
  CHECK_THROWS_AS(orbit_count(2, 2, 3, Modulus(2, 2), OrbitBudget{10}), std::runtime_error);
}

TEST_CASE("window sweeps report the stabilization point") {
  const OrbitTable t = orbit_stabilization(1, 0, 1, 4, Modulus(2, 2));
  REQUIRE(t.rows.size() == 4);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    CHECK(t.rows[i].window == static_cast<Index>(i) + 1);
    CHECK(t.rows[i].count == 3);
  }
  CHECK(t.stabilized);
  CHECK(t.stable_from == 1);

  const OrbitTable pairs = orbit_stabilization(1, 1, 1, 3, Modulus(2, 1));
  CHECK(pairs.rows[0].count == 4);
  CHECK(pairs.rows[1].count == 5);
  CHECK(pairs.rows[2].count == 5);
  CHECK(pairs.stabilized);
  CHECK(pairs.stable_from == 2);

  // a single-window sweep has no confirming repeat
  const OrbitTable lone = orbit_stabilization(1, 0, 2, 2, Modulus(2, 1));
  CHECK(lone.rows.size() == 1);
  CHECK(!lone.stabilized);
}
