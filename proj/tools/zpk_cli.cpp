#include <CLI11.hpp>

#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zpk/coset.hpp"
#include "zpk/enumerate.hpp"
#include "zpk/factor.hpp"
#include "zpk/io.hpp"
#include "zpk/matrix.hpp"
#include "zpk/orbit.hpp"
#include "zpk/residue.hpp"
#include "zpk/rng.hpp"
#include "zpk/subgroups.hpp"
#include "zpk/train.hpp"

namespace {

using namespace zpk;

// exit codes: 0 success / yes, 1 genuine negative, 2 usage or parse error,
// 3 undecided or budget exhausted, 4 internal invariant violation
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kUndecided = 3;
constexpr int kInternal = 4;

struct Output {
  std::string format = "json";
  std::string out_path;

  void deliver(const std::string& text) const {
    std::cout << text;
    if (!out_path.empty()) write_text_file(out_path, text);
  }
  void json(const Json& j, const std::string& text_alt) const {
    deliver(format == "text" ? text_alt : j.dump(2) + "\n");
  }
};

void add_output_flags(CLI::App* sc, Output& out, bool csv_default = false) {
  if (csv_default) out.format = "csv";
  sc->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember(csv_default ? std::vector<std::string>{"csv", "json"}
                                        : std::vector<std::string>{"json", "text"}));
  sc->add_option("--out", out.out_path, "also write the report to this file");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  return read_text_file(path);
}

GroupElement load_matrix(const std::string& path) {
  return matrix_from_json(parse_json_text(read_input(path), path), path);
}

TrainCoset load_train(const std::string& path) {
  return train_from_json(parse_json_text(read_input(path), path), path);
}

int exit_for(Decision d) {
  switch (d) {
    case Decision::yes:
      return kYes;
    case Decision::no:
      return kNo;
    default:
      return kUndecided;
  }
}

// ---- canon ----------------------------------------------------------------

struct CanonArgs {
  Nat p = 2;
  unsigned k = 1;
  Index m = 1;
  std::string in;
  Index random_window = 0;
  Nat seed = 1;
  Output out;
};

int run_canon(const CanonArgs& a) {
  std::optional<GroupElement> g;
  if (!a.in.empty()) {
    g = load_matrix(a.in);
  } else if (a.random_window > 0) {
    Rng rng(a.seed);
    g = random_invertible(rng, a.random_window, Modulus(a.p, a.k));
  } else {
    std::cerr << "canon: provide --in or --random\n";
    return kUsage;
  }
  const ReductionCertificate cert = normalize_to_window(*g, a.m);
  std::string why;
  const bool ok = verify_certificate(*g, a.m, cert, &why);

  Json report = to_json(CertificateRecord{a.m, *g, cert});
  report["command"] = "canon";
  report["verified"] = ok;
  if (!ok) report["why"] = why;

  std::ostringstream text;
  text << "canon: m=" << a.m << " window_in=" << trim_identity_tail(*g).window()
       << " window_out=" << trim_identity_tail(cert.out).window()
       << " verified=" << (ok ? "true" : "false") << "\n";
  a.out.json(report, text.str());
  return ok ? kYes : kInternal;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  Output out;
};

int run_verify(const VerifyArgs& a) {
  const CertificateRecord rec =
      certificate_from_json(parse_json_text(read_input(a.in), a.in), a.in);
  std::string why;
  const bool ok = verify_certificate(rec.g, rec.m, rec.cert, &why);
  Json report;
  report["command"] = "verify";
  report["m"] = rec.m;
  report["valid"] = ok;
  if (!ok) report["why"] = why;
  std::ostringstream text;
  text << "verify: m=" << rec.m << " valid=" << (ok ? "true" : "false");
  if (!ok) text << " why=" << why;
  text << "\n";
  a.out.json(report, text.str());
  return ok ? kYes : kNo;
}

// ---- coset-eq -------------------------------------------------------------

struct EqArgs {
  Nat p = 2;
  unsigned k = 1;
  Index m = 1;
  std::string a_path, b_path;
  Index random_window = 0;
  bool related = false;
  Nat seed = 1;
  Nat budget = Nat{1} << 20;
  Index window = 0;
  Output out;
};

int run_coset_eq(const EqArgs& a) {
  std::optional<GroupElement> ga, gb;
  if (!a.a_path.empty() && !a.b_path.empty()) {
    ga = load_matrix(a.a_path);
    gb = load_matrix(a.b_path);
  } else if (a.random_window > 0) {
    Rng rng(a.seed);
    const Modulus mod(a.p, a.k);
    ga = random_invertible(rng, a.random_window, mod);
    if (a.related) {
      const Index n = std::max(a.random_window, a.m + 2);
      const GroupElement u = random_gl_m(rng, a.m, n, mod);
      const GroupElement v = random_gl_m(rng, a.m, n, mod);
      gb = u * *ga * v;
    } else {
      gb = random_invertible(rng, a.random_window, mod);
    }
  } else {
    std::cerr << "coset-eq: provide --a/--b or --random\n";
    return kUsage;
  }

  const EqResult r = coset_eq(DoubleCoset{a.m, *ga}, DoubleCoset{a.m, *gb},
                              SearchBudget{a.budget, a.window});
  if (r.witness && !(r.witness->u * *ga == *gb * r.witness->v))
    throw std::logic_error("coset-eq: witness fails to intertwine the inputs");

  Json report;
  report["command"] = "coset-eq";
  report["m"] = a.m;
  report["budget"] = a.budget;
  Json rr = to_json(r);
  for (auto& [key, val] : rr.items()) report[key] = val;
  std::ostringstream text;
  text << "coset-eq: m=" << a.m << " decision=" << decision_name(r.decision)
       << " window=" << r.window << " examined=" << r.examined << "\n";
  a.out.json(report, text.str());
  return exit_for(r.decision);
}

// ---- coset-dist -----------------------------------------------------------

struct DistArgs {
  Index m = 1;
  std::string a_path, b_path;
  std::string method = "both";
  Nat budget = Nat{1} << 20;
  Output out;
};

int run_coset_dist(const DistArgs& a) {
  const GroupElement ga = load_matrix(a.a_path);
  const GroupElement gb = load_matrix(a.b_path);
  const DoubleCoset ca{a.m, ga}, cb{a.m, gb};
  const SearchBudget budget{a.budget, 0};

  Json report;
  report["command"] = "coset-dist";
  report["m"] = a.m;
  std::ostringstream text;
  text << "coset-dist: m=" << a.m;
  std::optional<PadicNorm> di, dh;
  if (a.method != "hausdorff") {
    di = coset_dist(ca, cb, DistMethod::inf, budget);
    report["inf"] = di->str();
    text << " inf=" << di->str();
  }
  if (a.method != "inf") {
    dh = coset_dist(ca, cb, DistMethod::hausdorff, budget);
    report["hausdorff"] = dh->str();
    text << " hausdorff=" << dh->str();
  }
  if (di && dh) {
    report["agree"] = (*di == *dh);
    text << " agree=" << ((*di == *dh) ? "true" : "false");
  }
  text << "\n";
  a.out.json(report, text.str());
  return kYes;
}

// ---- train-prod -----------------------------------------------------------

struct ProdArgs {
  std::string a_path, b_path;
  std::string interleave = "stack";
  Output out;
};

int run_train_prod(const ProdArgs& a) {
  const TrainCoset ca = load_train(a.a_path);
  const TrainCoset cb = load_train(a.b_path);
  const Interleave il = a.interleave == "riffle" ? Interleave::riffle : Interleave::stack;
  const TrainCoset prod = train_product(ca, cb, il);
  Json report = to_json(prod);
  report["command"] = "train-prod";
  report["interleave"] = a.interleave;
  std::ostringstream text;
  text << "train-prod: alpha=" << prod.alpha << " gamma=" << prod.gamma
       << " parts=" << prod.rep.size() << "\n";
  a.out.json(report, text.str());
  return kYes;
}

// ---- stabilize ------------------------------------------------------------

struct StabArgs {
  std::string a_path, b_path;
  Index j_max = -1;
  Nat budget = Nat{1} << 20;
  Index window = 0;
  Output out;
};

int run_stabilize(const StabArgs& a) {
  const TrainCoset ca = load_train(a.a_path);
  const TrainCoset cb = load_train(a.b_path);
  const Index j_max = a.j_max >= 0 ? a.j_max : default_j_max(ca, cb);
  const StabilizationResult s = stabilization_limit(ca, cb, j_max, SearchBudget{a.budget, a.window});

  Json steps = Json::array();
  for (Decision d : s.steps) steps.push_back(decision_name(d));
  Json report;
  report["command"] = "stabilize";
  report["j_max"] = j_max;
  report["stabilized"] = s.stabilized;
  report["j_star"] = s.j_star;
  report["steps"] = std::move(steps);
  report["stable"] = to_json(s.stable);
  std::ostringstream text;
  text << "stabilize: j_max=" << j_max << " stabilized=" << (s.stabilized ? "true" : "false")
       << " j_star=" << s.j_star << "\n";
  a.out.json(report, text.str());
  return s.stabilized ? kYes : kUndecided;
}

// ---- assoc-check ----------------------------------------------------------

struct AssocArgs {
  std::string a_path, b_path, c_path;
  Nat budget = Nat{1} << 20;
  Index window = 0;
  Output out;
};

int run_assoc(const AssocArgs& a) {
  const TrainCoset ca = load_train(a.a_path);
  const TrainCoset cb = load_train(a.b_path);
  const TrainCoset cc = load_train(a.c_path);
  const EqResult r = associativity_check(ca, cb, cc, SearchBudget{a.budget, a.window});
  Json report;
  report["command"] = "assoc-check";
  report["decision"] = decision_name(r.decision);
  report["window"] = r.window;
  report["examined"] = r.examined;
  std::ostringstream text;
  text << "assoc-check: decision=" << decision_name(r.decision) << "\n";
  a.out.json(report, text.str());
  return exit_for(r.decision);
}

// ---- factor ---------------------------------------------------------------

struct FactorArgs {
  Nat p = 2;
  unsigned k = 1;
  Index m = 1;
  std::string in;
  Index random_window = 0;
  Nat seed = 1;
  Output out;
};

int run_factor(const FactorArgs& a) {
  std::optional<GroupElement> g;
  if (!a.in.empty()) {
    g = load_matrix(a.in);
  } else if (a.random_window > 0) {
    Rng rng(a.seed);
    g = random_invertible(rng, a.random_window, Modulus(a.p, a.k));
  } else {
    std::cerr << "factor: provide --in or --random\n";
    return kUsage;
  }
  const std::vector<Factor> fs = generator_factorization(*g, a.m);
  bool ok = factor_product(fs, g->mod()) == *g;
  for (const Factor& f : fs) {
    if (f.kind == FactorKind::permutation && !is_permutation_matrix(f.element)) ok = false;
    if (f.kind == FactorKind::gl_m && !member(f.element, SubgroupSpec::gl(a.m))) ok = false;
  }
  Json report;
  report["command"] = "factor";
  report["m"] = a.m;
  report["input"] = to_json(*g);
  report["count"] = fs.size();
  report["factors"] = factors_to_json(fs);
  report["verified"] = ok;
  std::ostringstream text;
  text << "factor: m=" << a.m << " count=" << fs.size()
       << " verified=" << (ok ? "true" : "false") << "\n";
  a.out.json(report, text.str());
  return ok ? kYes : kInternal;
}

// ---- orbits ---------------------------------------------------------------

struct OrbitArgs {
  Nat p = 2;
  unsigned k = 1;
  Index n = 1;
  bool covectors = false;
  Index n_lo = 1;
  Index n_hi = 4;
  Nat max_states = Nat{1} << 22;
  Output out;
};

int run_orbits(const OrbitArgs& a) {
  const Modulus mod(a.p, a.k);
  const OrbitTable table =
      orbit_stabilization(a.n, a.covectors ? a.n : 0, a.n_lo, a.n_hi, mod, OrbitBudget{a.max_states});
  const std::string csv = orbit_csv(a.n, mod, table);
  if (a.out.format == "json") {
    Json rows = Json::array();
    for (const OrbitRow& r : table.rows) {
      Json row;
      row["N"] = r.window;
      row["orbit_count"] = r.count;
      rows.push_back(std::move(row));
    }
    Json report;
    report["command"] = "orbits";
    report["n"] = a.n;
    report["p"] = a.p;
    report["k"] = a.k;
    report["covectors"] = a.covectors;
    report["rows"] = std::move(rows);
    report["stabilized"] = table.stabilized;
    report["stable_from"] = table.stable_from;
    a.out.deliver(report.dump(2) + "\n");
  } else {
    a.out.deliver(csv);
  }
  return table.stabilized ? kYes : kUndecided;
}

// ---- selftest ---------------------------------------------------------

struct SelftestState {
  int failures = 0;

  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  }
  void run(const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << name << " (" << e.what() << ")\n";
      ++failures;
      return;
    }
    check(name, ok);
  }
};

int run_selftest() {
  SelftestState t;

  t.run("ring axioms, exhaustive at small sizes", [] {
    for (const auto& [p, k] : {std::pair<Nat, unsigned>{2, 2}, {3, 1}, {5, 1}}) {
      const Modulus m(p, k);
      for (Nat a = 0; a < m.size(); ++a)
        for (Nat b = 0; b < m.size(); ++b) {
          if (add_mod(a, b, m) != add_mod(b, a, m)) return false;
          if (mul_mod(a, b, m) != mul_mod(b, a, m)) return false;
          if (add_mod(a, sub_mod(b, a, m), m) != b) return false;
          for (Nat c = 0; c < m.size(); ++c) {
            if (mul_mod(a, mul_mod(b, c, m), m) != mul_mod(mul_mod(a, b, m), c, m)) return false;
            if (mul_mod(a, add_mod(b, c, m), m) !=
                add_mod(mul_mod(a, b, m), mul_mod(a, c, m), m))
              return false;
          }
          if (is_unit(a, m) && mul_mod(a, unit_inverse(a, m), m) != 1) return false;
        }
    }
    return true;
  });

  t.run("invertible counts match the closed form", [] {
    const Modulus z2(2, 1), z4(2, 2);
    return count_invertible(2, z2, Nat{1} << 16) == 6 && gl_order(2, z2) == 6 &&
           count_invertible(2, z4, Nat{1} << 16) == 96 && gl_order(2, z4) == 96;
  });

  t.run("window reduction certificates verify", [] {
    Rng rng(7);
    for (const auto& [p, k] : {std::pair<Nat, unsigned>{2, 1}, {3, 1}}) {
      const Modulus mod(p, k);
      for (Index m = 0; m <= 2; ++m)
        for (int rep = 0; rep < 8; ++rep) {
          const GroupElement g = random_invertible(rng, 3 * m + 3, mod);
          const ReductionCertificate cert = normalize_to_window(g, m);
          if (!verify_certificate(g, m, cert)) return false;
        }
    }
    return true;
  });

  t.run("conjugators localize into the bounded window", [] {
    Rng rng(11);
    const Modulus mod(2, 1);
    const Index m = 1;
    for (int rep = 0; rep < 8; ++rep) {
      const GroupElement g2 = random_invertible(rng, 3, mod);
      const GroupElement q = random_gl_m(rng, m, 6, mod);
      const GroupElement r = random_gl_m(rng, m, 6, mod);
      const GroupElement g1 = q * g2 * r;
      const LocalizedPair loc = localize_conjugators(g1, g2, m, q, r);
      const Index big = std::max({3 * m, trim_identity_tail(g1).window(),
                                  trim_identity_tail(g2).window()});
      const Index bound = m + 2 * (big - m);
      if (!(loc.q * g2 * loc.r == g1)) return false;
      if (trim_identity_tail(loc.q).window() > bound) return false;
      if (trim_identity_tail(loc.r).window() > bound) return false;
    }
    return true;
  });

  t.run("coset equality finds constructed witnesses", [] {
    Rng rng(13);
    const Modulus mod(2, 1);
    const Index m = 1;
    const GroupElement a = random_invertible(rng, 3, mod);
    const GroupElement u = random_gl_m(rng, m, 4, mod);
    const GroupElement v = random_gl_m(rng, m, 4, mod);
    const EqResult pos = coset_eq(DoubleCoset{m, a}, DoubleCoset{m, u * a * v}, {});
    if (pos.decision != Decision::yes) return false;
    const EqResult self = coset_eq(DoubleCoset{m, a}, DoubleCoset{m, a}, {});
    return self.decision == Decision::yes;
  });

  t.run("coset distance methods agree on samples", [] {
    Rng rng(17);
    const Modulus mod(2, 1);
    for (int rep = 0; rep < 3; ++rep) {
      const GroupElement a = random_invertible(rng, 3, mod);
      const GroupElement b = random_invertible(rng, 3, mod);
      const DoubleCoset ca{1, a}, cb{1, b};
      if (!(coset_dist(ca, cb, DistMethod::inf) == coset_dist(ca, cb, DistMethod::hausdorff)))
        return false;
    }
    return true;
  });

  t.run("identity coset is a unit for the train product", [] {
    const Modulus mod(2, 1);
    Rng rng(19);
    TupleElement parts;
    parts.parts = {random_invertible(rng, 2, mod), random_invertible(rng, 2, mod)};
    const TrainCoset a{1, 1, parts};
    const TrainCoset e = identity_train_coset(2, 1, mod);
    return train_coset_eq(train_product(e, a), a).decision == Decision::yes &&
           train_coset_eq(train_product(a, e), a).decision == Decision::yes;
  });

  t.run("stabilization matches the block-product coset", [] {
    const Modulus mod(2, 1);
    Rng rng(23);
    TupleElement g1, g2;
    g1.parts = {random_invertible(rng, 2, mod)};
    g2.parts = {random_invertible(rng, 2, mod)};
    const TrainCoset a{1, 1, g1}, b{1, 1, g2};
    const StabilizationResult s = stabilization_limit(a, b, default_j_max(a, b));
    if (!s.stabilized) return false;
    return train_coset_eq(s.stable, train_product(a, b)).decision == Decision::yes;
  });

  t.run("factorizations re-multiply with valid tags", [] {
    Rng rng(29);
    const Modulus mod(2, 1);
    for (Index m = 0; m <= 2; ++m)
      for (int rep = 0; rep < 5; ++rep) {
        const GroupElement g = random_invertible(rng, 4, mod);
        const std::vector<Factor> fs = generator_factorization(g, m);
        if (!(factor_product(fs, mod) == g)) return false;
        for (const Factor& f : fs) {
          if (f.kind == FactorKind::permutation && !is_permutation_matrix(f.element)) return false;
          if (f.kind == FactorKind::gl_m && !member(f.element, SubgroupSpec::gl(m))) return false;
        }
      }
    return true;
  });

  t.run("orbit counts stabilize at the expected values", [] {
    return orbit_count(1, 0, 3, Modulus(2, 1)) == 2 && orbit_count(1, 0, 3, Modulus(2, 2)) == 3 &&
           orbit_count(1, 1, 3, Modulus(2, 1)) == orbit_count(1, 1, 2, Modulus(2, 1));
  });

  std::cout << (t.failures == 0 ? "selftest: all properties hold\n"
                                : "selftest: FAILURES PRESENT\n");
  return t.failures == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for windowed invertible matrices over Z/p^k"};
  app.require_subcommand(1);

  CanonArgs canon_args;
  auto* canon = app.add_subcommand(
      "canon", "reduce a matrix to a bounded-window coset representative with certificate");
  canon->add_option("--p", canon_args.p, "prime (with --random)");
  canon->add_option("--k", canon_args.k, "precision exponent (with --random)");
  canon->add_option("--m", canon_args.m, "depth of the two-sided subgroup")->required();
  canon->add_option("--in", canon_args.in, "matrix record file, '-' for stdin");
  canon->add_option("--random", canon_args.random_window, "generate a random input of this window");
  canon->add_option("--seed", canon_args.seed, "random seed");
  add_output_flags(canon, canon_args.out);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "re-check a reduction certificate independently");
  verify->add_option("--in", verify_args.in, "certificate record file, '-' for stdin")->required();
  add_output_flags(verify, verify_args.out);

  EqArgs eq_args;
  auto* eq = app.add_subcommand("coset-eq", "decide equality of two-sided cosets at equal depth");
  eq->add_option("--p", eq_args.p, "prime (with --random)");
  eq->add_option("--k", eq_args.k, "precision exponent (with --random)");
  eq->add_option("--m", eq_args.m, "depth")->required();
  eq->add_option("--a", eq_args.a_path, "first matrix record");
  eq->add_option("--b", eq_args.b_path, "second matrix record");
  eq->add_option("--random", eq_args.random_window, "generate random inputs of this window");
  eq->add_flag("--related", eq_args.related, "with --random: draw the second from the first's coset");
  eq->add_option("--seed", eq_args.seed, "random seed");
  eq->add_option("--budget", eq_args.budget, "candidate budget for the search");
  eq->add_option("--window", eq_args.window, "override the enumeration window");
  add_output_flags(eq, eq_args.out);

  DistArgs dist_args;
  auto* dist = app.add_subcommand("coset-dist", "distance between cosets through their"
                                                " bounded-window intersections");
  dist->add_option("--m", dist_args.m, "depth")->required();
  dist->add_option("--a", dist_args.a_path, "first matrix record")->required();
  dist->add_option("--b", dist_args.b_path, "second matrix record")->required();
  dist->add_option("--method", dist_args.method, "inf, hausdorff, or both")
      ->check(CLI::IsMember({"inf", "hausdorff", "both"}));
  dist->add_option("--budget", dist_args.budget, "intersection sweep budget");
  add_output_flags(dist, dist_args.out);

  ProdArgs prod_args;
  auto* prod = app.add_subcommand("train-prod", "block product of composable tuple cosets");
  prod->add_option("--a", prod_args.a_path, "left tuple coset record")->required();
  prod->add_option("--b", prod_args.b_path, "right tuple coset record")->required();
  prod->add_option("--interleave", prod_args.interleave, "residual copy layout")
      ->check(CLI::IsMember({"stack", "riffle"}));
  add_output_flags(prod, prod_args.out);

  StabArgs stab_args;
  auto* stab = app.add_subcommand("stabilize", "scan the swap-insertion coset sequence until"
                                               " it stops changing");
  stab->add_option("--a", stab_args.a_path, "left tuple coset record")->required();
  stab->add_option("--b", stab_args.b_path, "right tuple coset record")->required();
  stab->add_option("--jmax", stab_args.j_max, "scan length (default: derived from the windows)");
  stab->add_option("--budget", stab_args.budget, "equality search budget");
  stab->add_option("--window", stab_args.window, "override the equality enumeration window");
  add_output_flags(stab, stab_args.out);

  AssocArgs assoc_args;
  auto* assoc = app.add_subcommand("assoc-check", "compare the two bracketings of a triple product");
  assoc->add_option("--a", assoc_args.a_path, "first tuple coset record")->required();
  assoc->add_option("--b", assoc_args.b_path, "second tuple coset record")->required();
  assoc->add_option("--c", assoc_args.c_path, "third tuple coset record")->required();
  assoc->add_option("--budget", assoc_args.budget, "equality search budget");
  assoc->add_option("--window", assoc_args.window, "override the equality enumeration window");
  add_output_flags(assoc, assoc_args.out);

  FactorArgs factor_args;
  auto* factor = app.add_subcommand(
      "factor", "write a matrix as block swaps times depth-subgroup elements");
  factor->add_option("--p", factor_args.p, "prime (with --random)");
  factor->add_option("--k", factor_args.k, "precision exponent (with --random)");
  factor->add_option("--m", factor_args.m, "depth of the subgroup factors")->required();
  factor->add_option("--in", factor_args.in, "matrix record file, '-' for stdin");
  factor->add_option("--random", factor_args.random_window,
                     "generate a random input of this window");
  factor->add_option("--seed", factor_args.seed, "random seed");
  add_output_flags(factor, factor_args.out);

  OrbitArgs orbit_args;
  auto* orbits = app.add_subcommand("orbits", "orbit counts of window truncations on vector"
                                              " collections, across windows");
  orbits->add_option("--p", orbit_args.p, "prime");
  orbits->add_option("--k", orbit_args.k, "precision exponent");
  orbits->add_option("--n", orbit_args.n, "number of vectors (and covectors if enabled)");
  orbits->add_flag("--covectors", orbit_args.covectors, "act on covectors as well");
  orbits->add_option("--nlo", orbit_args.n_lo, "first window");
  orbits->add_option("--nhi", orbit_args.n_hi, "last window");
  orbits->add_option("--max-states", orbit_args.max_states, "state budget");
  add_output_flags(orbits, orbit_args.out, /*csv_default=*/true);

  auto* selftest = app.add_subcommand("selftest", "run the built-in property suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*canon) return run_canon(canon_args);
    if (*verify) return run_verify(verify_args);
    if (*eq) return run_coset_eq(eq_args);
    if (*dist) return run_coset_dist(dist_args);
    if (*prod) return run_train_prod(prod_args);
    if (*stab) return run_stabilize(stab_args);
    if (*assoc) return run_assoc(assoc_args);
    if (*factor) return run_factor(factor_args);
    if (*orbits) return run_orbits(orbit_args);
    if (*selftest) return run_selftest();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kUndecided;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
