#include "zpk/train.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace zpk {

const Modulus& TupleElement::mod() const {
  if (parts.empty()) throw std::logic_error("tuple: no parts");
  return parts.front().mod();
}

bool operator==(const TupleElement& a, const TupleElement& b) {
  if (a.parts.size() != b.parts.size()) return false;
  for (size_t l = 0; l < a.parts.size(); ++l)
    if (!(a.parts[l] == b.parts[l])) return false;
  return true;
}

TupleElement identity_tuple(Index n, const Modulus& m) {
  if (n < 1) throw std::invalid_argument("tuple: need at least one part");
  TupleElement t;
  t.parts.assign(static_cast<size_t>(n), GroupElement::identity(m));
  return t;
}

TrainCoset identity_train_coset(Index n, Index depth, const Modulus& m) {
  if (depth < 0) throw std::invalid_argument("train coset: negative depth");
  return TrainCoset{depth, depth, identity_tuple(n, m)};
}

namespace {

void validate_tuple(const TupleElement& t) {
  if (t.parts.empty()) throw std::invalid_argument("tuple: no parts");
  for (const GroupElement& g : t.parts)
    if (!(g.mod() == t.parts.front().mod()))
      throw std::invalid_argument("tuple: parts mix moduli");
}

void validate_train(const TrainCoset& t) {
  if (t.alpha < 0 || t.gamma < 0) throw std::invalid_argument("train coset: negative depth");
  validate_tuple(t.rep);
}

// riffle position of element s of the first (of two) runs of the given sizes
Index riffle_pos(Index s, bool first, Index n1, Index n2) {
  const Index both = std::min(n1, n2);
  if (s < both) return 2 * s + (first ? 0 : 1);
  return both + s;  // leftover run continues after the alternating prefix
}

}  // namespace

TupleElement circ_representative(const TupleElement& g1, const TupleElement& g2, Index alpha,
                                 Index beta, Index gamma, Interleave il) {
  validate_tuple(g1);
  validate_tuple(g2);
  if (alpha < 0 || beta < 0 || gamma < 0)
    throw std::invalid_argument("circ: depths must be nonnegative");
  if (g1.parts.size() != g2.parts.size())
    throw std::invalid_argument("circ: tuples must have equal length");
  const Modulus& m = g1.mod();
  if (!(m == g2.mod())) throw std::invalid_argument("circ: tuples mix moduli");

  std::vector<GroupElement> left, right;
  left.reserve(g1.parts.size());
  right.reserve(g2.parts.size());
  for (const GroupElement& g : g1.parts) left.push_back(trim_identity_tail(g));
  for (const GroupElement& g : g2.parts) right.push_back(trim_identity_tail(g));

  // shared active extents so the assembly is one permutation for all parts
  Index t1 = std::max(alpha, beta);
  for (const GroupElement& g : left) t1 = std::max(t1, g.window());
  Index t2 = std::max(beta, gamma);
  for (const GroupElement& g : right) t2 = std::max(t2, g.window());
  const Index c1 = t1 - beta;   // active columns of the first residual copy
  const Index r2 = t2 - beta;   // active rows of the second copy
  const Index c2 = t2 - gamma;  // active columns of the second copy
  const Index r1 = t1 - alpha;  // active rows of the first copy
  const Index w = t1 + t2 - beta;

  // the right factor padded to w carries its pass-through block at the tail
  // [t2, w); these maps move it between the two residual copies
  std::vector<Index> rows(static_cast<size_t>(w)), cols(static_cast<size_t>(w));
  for (Index i = 0; i < beta; ++i) rows[static_cast<size_t>(i)] = i;
  for (Index s = 0; s < r2; ++s) rows[static_cast<size_t>(beta + s)] = beta + c1 + s;
  for (Index u = 0; u < c1; ++u) rows[static_cast<size_t>(t2 + u)] = beta + u;
  for (Index j = 0; j < gamma; ++j) cols[static_cast<size_t>(j)] = j;
  for (Index t = 0; t < c2; ++t) cols[static_cast<size_t>(gamma + t)] = gamma + c1 + t;
  for (Index u = 0; u < c1; ++u) cols[static_cast<size_t>(t2 + u)] = gamma + u;
  const GroupElement pr = permutation_embed(rows, m);
  const GroupElement pc = permutation_embed(cols, m);
  const GroupElement pc_inv = inverse(pc);

  TupleElement out;
  out.parts.reserve(left.size());
  for (size_t l = 0; l < left.size(); ++l) {
    GroupElement x = padded(left[l], w) * pr * padded(right[l], w) * pc_inv;
    // the assembled window splits as rows (alpha | r1 | r2), columns
    // (gamma | c1 | c2); spot-check the hard-zero block of the formula
    const ResidueMatrix xc = padded_core(x, w);
    for (Index s = 0; s < r2; ++s)
      for (Index t = 0; t < c1; ++t)
        if (xc(alpha + r1 + s, gamma + t) != 0)
          throw std::logic_error("circ: assembly violates the zero block");
    out.parts.push_back(std::move(x));
  }

  if (il == Interleave::riffle) {
    std::vector<Index> rr(static_cast<size_t>(w)), rc(static_cast<size_t>(w));
    for (Index i = 0; i < alpha; ++i) rr[static_cast<size_t>(i)] = i;
    for (Index s = 0; s < r1; ++s)
      rr[static_cast<size_t>(alpha + s)] = alpha + riffle_pos(s, true, r1, r2);
    for (Index s = 0; s < r2; ++s)
      rr[static_cast<size_t>(alpha + r1 + s)] = alpha + riffle_pos(s, false, r1, r2);
    for (Index j = 0; j < gamma; ++j) rc[static_cast<size_t>(j)] = j;
    for (Index t = 0; t < c1; ++t)
      rc[static_cast<size_t>(gamma + t)] = gamma + riffle_pos(t, true, c1, c2);
    for (Index t = 0; t < c2; ++t)
      rc[static_cast<size_t>(gamma + c1 + t)] = gamma + riffle_pos(t, false, c1, c2);
    const GroupElement tr = permutation_embed(rr, m);
    const GroupElement tc_inv = inverse(permutation_embed(rc, m));
    for (GroupElement& x : out.parts) x = tr * x * tc_inv;
  }
  return out;
}

TrainCoset trimmed(const TrainCoset& t) {
  validate_train(t);
  const Modulus& m = t.rep.mod();
  const Index head = std::max(t.alpha, t.gamma);

  std::vector<GroupElement> parts;
  parts.reserve(t.rep.parts.size());
  for (const GroupElement& g : t.rep.parts) parts.push_back(trim_identity_tail(g));

  for (;;) {
    Index w = head;
    for (const GroupElement& g : parts) w = std::max(w, g.window());
    std::vector<ResidueMatrix> cores;
    cores.reserve(parts.size());
    for (const GroupElement& g : parts) cores.push_back(padded_core(g, w));

    auto column_is = [&](const ResidueMatrix& c, Index j, Index target) {
      for (Index i = 0; i < w; ++i)
        if (c(i, j) != (i == target ? Nat{1} : Nat{0})) return false;
      return true;
    };
    auto row_is = [&](const ResidueMatrix& c, Index i, Index target) {
      for (Index j = 0; j < w; ++j)
        if (c(i, j) != (j == target ? Nat{1} : Nat{0})) return false;
      return true;
    };

    // coordinate pairs swapped cleanly by every part cancel with one
    // right-multiplication by the transposition (fixes the first head
    // coordinates, so it lies in the right depth subgroup)
    std::vector<Index> tau(static_cast<size_t>(w));
    for (Index i = 0; i < w; ++i) tau[static_cast<size_t>(i)] = i;
    bool cancelled = false;
    for (Index i = head; i < w; ++i) {
      if (tau[static_cast<size_t>(i)] != i) continue;
      Index partner = -1;
      for (Index j = 0; j < w; ++j)
        if (cores.front()(j, i) != 0) {
          partner = j;
          break;
        }
      if (partner <= i || tau[static_cast<size_t>(partner)] != partner) continue;
      bool pair_ok = true;
      for (const ResidueMatrix& c : cores) {
        if (!column_is(c, i, partner) || !column_is(c, partner, i) || !row_is(c, i, partner) ||
            !row_is(c, partner, i)) {
          pair_ok = false;
          break;
        }
      }
      if (!pair_ok) continue;
      tau[static_cast<size_t>(i)] = partner;
      tau[static_cast<size_t>(partner)] = i;
      cancelled = true;
    }
    if (cancelled) {
      const GroupElement pt = permutation_embed(tau, m);
      for (size_t l = 0; l < parts.size(); ++l)
        parts[l] = trim_identity_tail(GroupElement(cores[l]) * pt);
      continue;
    }

    // move coordinates on which every part acts trivially to the tail;
    // the shared conjugation fixes the heads on both sides
    std::vector<Index> keep, drop;
    for (Index i = 0; i < w; ++i) {
      bool trivial = i >= head;
      for (size_t l = 0; l < cores.size() && trivial; ++l)
        trivial = column_is(cores[l], i, i) && row_is(cores[l], i, i);
      (trivial ? drop : keep).push_back(i);
    }
    bool tail_only = true;
    for (size_t s = 0; s < drop.size(); ++s)
      if (drop[s] != w - static_cast<Index>(drop.size()) + static_cast<Index>(s)) {
        tail_only = false;
        break;
      }
    if (drop.empty() || tail_only) break;  // nothing interior to compact

    std::vector<Index> sigma(static_cast<size_t>(w));
    Index pos = 0;
    for (Index i : keep) sigma[static_cast<size_t>(i)] = pos++;
    for (Index i : drop) sigma[static_cast<size_t>(i)] = pos++;
    const GroupElement ps = permutation_embed(sigma, m);
    const GroupElement ps_inv = inverse(ps);
    for (size_t l = 0; l < parts.size(); ++l)
      parts[l] = trim_identity_tail(ps * GroupElement(cores[l]) * ps_inv);
  }

  TrainCoset out{t.alpha, t.gamma, TupleElement{std::move(parts)}};
  return out;
}

TrainCoset train_product(const TrainCoset& a, const TrainCoset& b, Interleave il) {
  validate_train(a);
  validate_train(b);
  if (a.gamma != b.alpha)
    throw std::invalid_argument("train product: inner depths must agree");
  if (a.rep.size() != b.rep.size())
    throw std::invalid_argument("train product: tuples must have equal length");
  if (!(a.rep.mod() == b.rep.mod()))
    throw std::invalid_argument("train product: tuples mix moduli");
  TrainCoset out{a.alpha, b.gamma,
                 circ_representative(a.rep, b.rep, a.alpha, a.gamma, b.gamma, il)};
  return trimmed(out);
}

EqResult train_coset_eq(const TrainCoset& a, const TrainCoset& b, const SearchBudget& budget) {
  validate_train(a);
  validate_train(b);
  if (a.alpha != b.alpha || a.gamma != b.gamma)
    throw std::invalid_argument("train equality: depths must agree");
  if (a.rep.size() != b.rep.size())
    throw std::invalid_argument("train equality: tuples must have equal length");
  if (!(a.rep.mod() == b.rep.mod()))
    throw std::invalid_argument("train equality: tuples mix moduli");
  const TrainCoset ta = trimmed(a);
  const TrainCoset tb = trimmed(b);
  return conjugate_tuple_search(ta.rep.parts, tb.rep.parts, a.alpha, a.gamma, budget);
}

StabilizationResult stabilization_limit(const TrainCoset& a, const TrainCoset& b, Index j_max,
                                        const SearchBudget& budget) {
  validate_train(a);
  validate_train(b);
  if (a.gamma != b.alpha)
    throw std::invalid_argument("stabilization: inner depths must agree");
  if (a.rep.size() != b.rep.size())
    throw std::invalid_argument("stabilization: tuples must have equal length");
  if (!(a.rep.mod() == b.rep.mod()))
    throw std::invalid_argument("stabilization: tuples mix moduli");
  if (j_max < 0) throw std::invalid_argument("stabilization: negative scan length");
  const Index beta = a.gamma;
  const Modulus& m = a.rep.mod();

  std::vector<TrainCoset> seq;
  seq.reserve(static_cast<size_t>(j_max) + 1);
  for (Index j = 0; j <= j_max; ++j) {
    const GroupElement th = theta(j, beta, m);
    TupleElement parts;
    parts.parts.reserve(a.rep.parts.size());
    for (size_t l = 0; l < a.rep.parts.size(); ++l)
      parts.parts.push_back(a.rep.parts[l] * th * b.rep.parts[l]);
    seq.push_back(trimmed(TrainCoset{a.alpha, b.gamma, std::move(parts)}));
  }

  StabilizationResult res;
  res.steps.reserve(static_cast<size_t>(j_max));
  for (Index j = 0; j < j_max; ++j)
    res.steps.push_back(
        train_coset_eq(seq[static_cast<size_t>(j)], seq[static_cast<size_t>(j) + 1], budget)
            .decision);

  Index j_star = 0;
  for (size_t s = 0; s < res.steps.size(); ++s)
    if (res.steps[s] == Decision::no) j_star = static_cast<Index>(s) + 1;
  bool certified = true;
  for (size_t s = static_cast<size_t>(j_star); s < res.steps.size(); ++s)
    if (res.steps[s] != Decision::yes) certified = false;
  res.j_star = j_star;
  res.stable = seq[static_cast<size_t>(j_star)];
  res.stabilized = certified && (j_max == 0 || j_star < j_max);
  return res;
}

Index default_j_max(const TrainCoset& a, const TrainCoset& b) {
  Index w = 1;
  for (const GroupElement& g : a.rep.parts) w = std::max(w, trim_identity_tail(g).window());
  for (const GroupElement& g : b.rep.parts) w = std::max(w, trim_identity_tail(g).window());
  return 2 * w + a.gamma;
}

EqResult associativity_check(const TrainCoset& a, const TrainCoset& b, const TrainCoset& c,
                             const SearchBudget& budget) {
  const TrainCoset left = train_product(train_product(a, b), c);
  const TrainCoset right = train_product(a, train_product(b, c));
  return train_coset_eq(left, right, budget);
}

}  // namespace zpk
