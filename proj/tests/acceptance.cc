// Acceptance run: one PASS/FAIL line per criterion. With an argument N only criterion N runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "czs/circuit.h"
#include "czs/entangle.h"
#include "czs/error.h"
#include "czs/optimizer.h"
#include "czs/relations.h"
#include "czs/sim.h"
#include "czs/word.h"
#include "support.h"

namespace {

using namespace czs;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char *name;
  double budget_seconds;
  std::function<Outcome()> run;
};

Outcome fail(const std::string &why) { return {false, why}; }

Outcome group_order() {
  const size_t expected[] = {4, 48, 1536, 122880};
  std::ostringstream d;
  for (int k = 2; k <= 5; ++k) {
    const size_t order = enumerate_group(k, Topology::Complete)->order();
    d << "k=" << k << ":" << order << " ";
    if (order != expected[k - 2]) return fail(d.str());
  }
  return {true, d.str()};
}

Outcome presentations() {
  for (int k = 3; k <= 6; ++k) {
    if (!verify_presentation(k, PresentationKind::Adjacent)) return fail("adjacent presentation, k=" + std::to_string(k));
    if (!verify_presentation(k, PresentationKind::Minimal)) return fail("minimal presentation, k=" + std::to_string(k));
  }
  const auto mutated = verify_relators(3, {parse_word(3, "z0 s1 z0 s1 z0 s1")});
  if (mutated.front().identity) return fail("(z0 s1)^3 accepted");
  return {true, "k=3..6 both presentations; (z0 s1)^3 rejected"};
}

Outcome ctozs_golden() {
  const GeneratorWord op = parse_word(3, "s0 z1 z0 s1 z0-2 z0 s1");
  const Circuit input = word_to_circuit(op);
  const NormalForm nf = normalize(input);
  const NormalForm expected{PairSet(3, {{0, 2}, {1, 2}}), Permutation::transposition(3, 0, 1)};
  if (!(nf == expected)) return fail("normal form " + nf.to_string());
  const Circuit out = synthesize_complete(nf);
  if (out.gates.size() != 3) return fail("resynthesis has " + std::to_string(out.gates.size()) + " gates");
  if (!equivalent(input, out)) return fail("resynthesis not equivalent");
  return {true, nf.to_string() + ", 3 gates, equivalent"};
}

Outcome oracle_property() {
  std::mt19937_64 rng(20240601);
  for (int n = 0; n < 500; ++n) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const int len = 1 + static_cast<int>(rng() % 30);
    const Circuit in = testing::random_cz_swap_circuit(rng, k, len);
    const NormalForm nf = normalize(in);
    const Circuit out = synthesize_complete(nf);
    if (!equivalent(in, out)) return fail("inequivalent output on sample " + std::to_string(n));
    if (in.gates.size() > nf.phase.size() + static_cast<size_t>(k - 1) && out.gates.size() > in.gates.size()) {
      return fail("gate count grew on sample " + std::to_string(n));
    }
  }
  return {true, "500 circuits"};
}

Outcome rothe() {
  const Permutation sigma = Permutation::from_cycles(5, {{0, 3}, {2, 4}});
  const GeneratorWord w = rothe_reduced_word(sigma);
  if (w.to_string() != "s2 s1 s0 s1 s3 s2") return fail("golden word " + w.to_string());
  std::mt19937_64 rng(7);
  for (int n = 0; n < 1000; ++n) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const Permutation p = testing::random_permutation(rng, k);
    const GeneratorWord r = rothe_reduced_word(p);
    if (static_cast<int>(r.size()) != p.inversion_count()) return fail("length mismatch for " + p.to_string());
    if (!(r.evaluate() == NormalForm{PairSet(k), p})) return fail("word does not evaluate to " + p.to_string());
  }
  return {true, "golden word; 1000 random permutations"};
}

Outcome dehn() {
  const RelationSet rel = RelationSet::line(5);
  const GeneratorWord a = parse_word(5, "z0 z3 s1 s0 z1 z3 s0");
  const GeneratorWord ra = dehn_reduce(a, rel);
  if (ra.to_string() != "s1") return fail("first example reduced to " + ra.to_string());
  const GeneratorWord b = parse_word(5, "s3 s2 z1 s2 s3 s2 z1 s2");
  if (!(dehn_reduce(b, rel) == b)) return fail("second example is not a fixpoint");
  const GeneratorWord h = heuristic_line_reduce(b);
  if (h.size() != 6 || !(h.evaluate() == b.evaluate()) || !h.is_line()) {
    return fail("heuristic gave " + h.to_string());
  }
  const GeneratorWord shortest = bfs_minimize(b.evaluate(), Topology::Line);
  if (!(shortest.evaluate() == b.evaluate())) return fail("BFS word evaluates elsewhere");
  return {true, "s1; fixpoint; heuristic " + h.to_string() + "; BFS minimum " + std::to_string(shortest.size())};
}

Outcome ghz_synthesis() {
  for (int k = 2; k <= 6; ++k) {
    std::vector<RingScalar> zero(size_t{1} << k);
    zero[0] = RingScalar(1);
    if (apply_circuit(ghz_circuit(k), zero) != named_state(NamedState::GHZ, k).exact) {
      return fail("k=" + std::to_string(k));
    }
  }
  return {true, "k=2..6"};
}

Outcome no_w3() {
  std::mt19937_64 rng(3);
  for (uint64_t mask = 0; mask < 8; ++mask) {
    const PairSet e = testing::pair_set_from_mask(3, mask);
    for (int n = 0; n < 5; ++n) {
      if (classify3(phi_state(e, random_params(3, rng))) == Class3::Wclass) return fail("W class for " + e.to_string());
    }
  }
  if (classify3(named_state(NamedState::GHZ, 3)) != Class3::GHZclass) return fail("GHZ3 misclassified");
  if (classify3(named_state(NamedState::W, 3)) != Class3::Wclass) return fail("W3 misclassified");
  return {true, "40 states, GHZ3, W3"};
}

Outcome crossing() {
  const PureState s = testing::crossing_state();
  const Evaluation d = delta3_eval(s), c = catalecticant3_eval(s);
  if (!d.vanishes()) return fail("Delta = " + d.to_string());
  if (c.vanishes()) return fail("catalecticant vanishes");
  return {true, "Delta " + d.to_string() + ", catalecticant nonzero"};
}

Outcome four_qubit_sweep() {
  std::mt19937_64 rng(4);
  int covariant_states = 0;
  for (uint64_t mask = 0; mask < 64; ++mask) {
    const PairSet e = testing::pair_set_from_mask(4, mask);
    const int c = phi4_case(e);
    for (int n = 0; n < 5; ++n) {
      const PureState s = phi_state(e, random_params(4, rng));
      const Invariants4 inv = invariants4(s);
      if (!(inv.L * inv.M * inv.N).is_zero()) return fail("LMN != 0 for " + e.to_string());
      for (const auto &q : quartics_from(inv)) {
        if (!q.discriminant().is_zero()) return fail("quartic discriminant != 0 for " + e.to_string());
      }
      if (c >= 7) {
        const Covariants4 cov = covariants4(s);
        ++covariant_states;
        const bool ok = c <= 10 ? cov.K3.is_zero() && cov.L_cov.is_zero()
                                : cov.Gbar.is_zero() && cov.G_cov.is_zero() && cov.H_cov.is_zero() && cov.L_cov.is_zero();
        if (!ok) return fail("covariant signature fails for case " + std::to_string(c) + " " + e.to_string());
      }
    }
  }
  return {true, "320 states, " + std::to_string(covariant_states) + " covariant checks"};
}

Outcome gabcd() {
  const RingScalar a(1), b(2), c(3), d(4), two(2);
  std::vector<RingScalar> amp(16);
  amp[0b0000] = amp[0b1111] = (a + d) / two;
  amp[0b0011] = amp[0b1100] = (a - d) / two;
  amp[0b0101] = amp[0b1010] = (b + c) / two;
  amp[0b0110] = amp[0b1001] = (b - c) / two;
  const Quartic q1 = quartics(PureState::from_exact(4, amp))[0];
  for (const RingScalar &r : {a, b, c, d}) {
    if (!q1.evaluate(r * r, RingScalar(1)).is_zero()) return fail("Q1 nonzero at " + (r * r).to_string());
  }
  return {true, "Q1 vanishes at 1, 4, 9, 16"};
}

Outcome five_qubit_sweep() {
  std::mt19937_64 rng(5);
  int table_ok = 0, fallback = 0, missing = 0;
  std::string first_missing;
  for (uint64_t mask = 0; mask < 1024; ++mask) {
    const PairSet e = testing::pair_set_from_mask(5, mask);
    for (int n = 0; n < 3; ++n) {
      const ParamSpec p = random_params(5, rng);
      const TabulatedSolution t = tabulated_solution_5q(e, p);
      if (t.solution && !hyperdet_system_check(phi_state(e, p), *t.solution)) return fail("unverified solution");
      if (t.table_row_ok) {
        ++table_ok;
      } else if (t.solution) {
        ++fallback;
      } else {
        if (missing++ == 0) first_missing = e.to_string();
      }
    }
  }
  std::ostringstream d;
  d << table_ok << " by table row, " << fallback << " by fallback search, " << missing << " without a solution";
  if (missing) return fail(d.str() + " (first: " + first_missing + ")");
  return {true, d.str()};
}

Outcome ghz_genericity() {
  for (int k = 2; k <= 8; ++k) {
    if (ghz_generic(k) != (k <= 3)) return fail("k=" + std::to_string(k));
  }
  return {true, "generic for k=2,3 only"};
}

Outcome transvectant_oracle() {
  std::mt19937_64 rng(14);
  auto rnd = [&] { return RingScalar(mpq_class(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9))); };
  for (int n = 0; n < 10; ++n) {
    const RingScalar a0 = rnd(), a1 = rnd(), b0 = rnd(), b1 = rnd();
    const MultiPoly f = MultiPoly::variable(1, {0, 0}) * a0 + MultiPoly::variable(1, {0, 1}) * a1;
    const MultiPoly g = MultiPoly::variable(1, {0, 0}) * b0 + MultiPoly::variable(1, {0, 1}) * b1;
    const int one[] = {1};
    if (!(transvect(f, g, one) == MultiPoly::constant(1, a0 * b1 - a1 * b0))) return fail("linear forms");
  }
  const int orders[] = {0, 0, 1, 1};
  for (int n = 0; n < 10; ++n) {
    std::vector<RingScalar> amp(16);
    for (auto &v : amp) v = rnd();
    const MultiPoly a = ground_form(amp, 4);
    const MultiPoly b2200 = transvect(a, a, orders) * RingScalar(mpq_class(1, 2));
    // Omega on pairs 2 and 3 of a multilinear form: sum of amp products weighted by eps(k,k') eps(l,l').
    auto eps = [](int u, int v) { return u == v ? 0 : (u == 0 ? 1 : -1); };
    MultiPoly oracle(4);
    for (int s = 0; s < 16; ++s) {
      for (int t = 0; t < 16; ++t) {
        const int w = eps(s >> 1 & 1, t >> 1 & 1) * eps(s & 1, t & 1);
        if (w == 0) continue;
        const int i = s >> 3 & 1, j = s >> 2 & 1, ip = t >> 3 & 1, jp = t >> 2 & 1;
        const MultiPoly m = MultiPoly::variable(4, {0, i}) * MultiPoly::variable(4, {0, ip}) *
                            MultiPoly::variable(4, {1, j}) * MultiPoly::variable(4, {1, jp});
        oracle += m * (amp[s] * amp[t] * RingScalar(w) * RingScalar(mpq_class(1, 2)));
      }
    }
    if (!(b2200 == oracle)) return fail("B2200 differs on state " + std::to_string(n));
  }
  return {true, "10 linear pairs, 10 random states"};
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {1, "group order", 30, group_order},
      {2, "presentation relators", 5, presentations},
      {3, "CZ/SWAP normal form golden", 1, ctozs_golden},
      {4, "normalize/synthesize oracle property", 60, oracle_property},
      {5, "inversion-diagram words", 5, rothe},
      {6, "line reduction goldens", 30, dehn},
      {7, "GHZ synthesis", 5, ghz_synthesis},
      {8, "3-qubit states avoid the W class", 10, no_w3},
      {9, "3-qubit crossing example", 1, crossing},
      {10, "4-qubit sweep", 600, four_qubit_sweep},
      {11, "G_abcd quartic roots", 1, gabcd},
      {12, "5-qubit common-zero sweep", 300, five_qubit_sweep},
      {13, "GHZ genericity", 1, ghz_genericity},
      {14, "transvectant micro-oracle", 10, transvectant_oracle},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto &c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) o = fail(o.detail + "; over time budget");
    std::printf("%s %2d %s: %s (%.2f s, budget %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.budget_seconds);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
