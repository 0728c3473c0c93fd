#include <gtest/gtest.h>

#include <random>

#include "czs/error.h"
#include "czs/optimizer.h"
#include "czs/relations.h"
#include "czs/sim.h"
#include "czs/word.h"
#include "support.h"

namespace czs {
namespace {

GeneratorWord random_line_word(std::mt19937_64 &rng, int k, int length) {
  GeneratorWord w{k, {}};
  for (int n = 0; n < length; ++n) {
    const int i = static_cast<int>(rng() % (k - 1));
    w.letters.push_back(rng() % 2 ? Letter::s(i) : Letter::z(i));
  }
  return w;
}

TEST(Normalize, GoldenOperator) {
  const Circuit c = word_to_circuit(parse_word(3, "s0 z1 z0 s1 z0-2 z0 s1"));
  const NormalForm nf = normalize(c);
  EXPECT_EQ(nf.to_string(), "({{0,2},{1,2}}, (0,1))");
  const Circuit out = synthesize_complete(nf);
  EXPECT_EQ(serialize_circuit(out), "qubits 3\ncz 0 2\ncz 1 2\nswap 0 1\n");
  EXPECT_TRUE(equivalent(c, out));
}

TEST(Normalize, RejectsNonCliffordPermutationGates) {
  try {
    normalize(Circuit(2, {Gate::cz(0, 1), Gate::h(1)}));
    FAIL();
  } catch (const DomainError &e) {
    EXPECT_NE(std::string(e.what()).find("gate 1"), std::string::npos) << e.what();
  }
}

TEST(Synthesize, ShapeAndCount) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    const int k = 2 + static_cast<int>(rng() % 6);
    const Circuit c = testing::random_cz_swap_circuit(rng, k, 1 + static_cast<int>(rng() % 30));
    const NormalForm nf = normalize(c);
    const Circuit out = synthesize_complete(nf);
    size_t swaps = 0;
    for (const auto &cycle : nf.perm.cycles()) swaps += cycle.size() - 1;
    EXPECT_EQ(out.gates.size(), nf.phase.size() + swaps);
    bool seen_swap = false;
    for (const auto &g : out.gates) {
      if (g.kind == GateKind::SWAP) seen_swap = true;
      EXPECT_FALSE(seen_swap && g.kind == GateKind::CZ);
    }
    EXPECT_EQ(normalize(out), nf);
  }
}

TEST(Rothe, GoldenAndProperty) {
  EXPECT_EQ(rothe_reduced_word(Permutation::from_cycles(5, {{0, 3}, {2, 4}})).to_string(), "s2 s1 s0 s1 s3 s2");
  EXPECT_TRUE(rothe_reduced_word(Permutation::identity(4)).empty());
  std::mt19937_64 rng(32);
  for (int n = 0; n < 300; ++n) {
    const int k = 2 + static_cast<int>(rng() % 7);
    const Permutation p = testing::random_permutation(rng, k);
    const GeneratorWord w = rothe_reduced_word(p);
    EXPECT_EQ(static_cast<int>(w.size()), p.inversion_count());
    EXPECT_EQ(w.evaluate().perm, p);
  }
}

TEST(Words, ParseAndFormat) {
  const GeneratorWord w = parse_word(4, "s0 z2 z0-3");
  EXPECT_EQ(w.to_string(), "s0 z2 z0-3");
  EXPECT_FALSE(w.is_line());
  EXPECT_EQ(circuit_to_word(word_to_circuit(w)), w);
  EXPECT_THROW(parse_word(3, "s2"), DomainError);
  EXPECT_THROW(parse_word(3, "q0"), DomainError);
}

TEST(FreeReduce, CancelsPairs) {
  EXPECT_TRUE(free_reduce(parse_word(3, "s0 z1 z1 s0")).empty());
  EXPECT_EQ(free_reduce(parse_word(3, "s0 z1 s0")).size(), 3u);
}

TEST(CoxeterReduce, PreservesElementAndNeverGrows) {
  std::mt19937_64 rng(33);
  for (int n = 0; n < 200; ++n) {
    const int k = 2 + static_cast<int>(rng() % 4);
    const GeneratorWord w = random_line_word(rng, k, static_cast<int>(rng() % 16));
    const GeneratorWord r = coxeter_reduce(w);
    EXPECT_EQ(r.evaluate(), w.evaluate());
    EXPECT_LE(r.size(), w.size());
  }
}

TEST(DehnReduce, Goldens) {
  const RelationSet rel = RelationSet::line(5);
  EXPECT_EQ(dehn_reduce(parse_word(5, "z0 z3 s1 s0 z1 z3 s0"), rel).to_string(), "s1");
  const GeneratorWord fixed = parse_word(5, "s3 s2 z1 s2 s3 s2 z1 s2");
  EXPECT_EQ(dehn_reduce(fixed, rel), fixed);
}

TEST(DehnReduce, PreservesElementOnRandomWords) {
  std::mt19937_64 rng(34);
  for (int k = 3; k <= 4; ++k) {
    const RelationSet rel = RelationSet::line(k);
    for (int n = 0; n < 60; ++n) {
      const GeneratorWord w = random_line_word(rng, k, static_cast<int>(rng() % 14));
      const GeneratorWord r = dehn_reduce(w, rel);
      EXPECT_EQ(r.evaluate(), w.evaluate());
      EXPECT_LE(r.size(), w.size());
    }
  }
}

TEST(HeuristicLineReduce, FindsLengthSix) {
  const GeneratorWord w = parse_word(5, "s3 s2 z1 s2 s3 s2 z1 s2");
  const GeneratorWord h = heuristic_line_reduce(w);
  EXPECT_EQ(h.size(), 6u);
  EXPECT_EQ(h.evaluate(), w.evaluate());
  EXPECT_EQ(bfs_minimize(w.evaluate(), Topology::Line).size(), 6u);
}

TEST(HeuristicLineReduce, NeverWorseThanDehnAndReachesOptimumOnSmallGroups) {
  std::mt19937_64 rng(35);
  const RelationSet rel = RelationSet::line(3);
  for (int n = 0; n < 40; ++n) {
    const GeneratorWord w = random_line_word(rng, 3, 4 + static_cast<int>(rng() % 10));
    const GeneratorWord h = heuristic_line_reduce(w);
    EXPECT_EQ(h.evaluate(), w.evaluate());
    EXPECT_LE(h.size(), dehn_reduce(w, rel).size());
    EXPECT_GE(h.size(), bfs_minimize(w.evaluate(), Topology::Line).size());
  }
}

TEST(BfsMinimize, CompleteTopologyNeverLongerThanSynthesis) {
  std::mt19937_64 rng(36);
  for (int n = 0; n < 50; ++n) {
    const Circuit c = testing::random_cz_swap_circuit(rng, 4, 12);
    const NormalForm nf = normalize(c);
    const GeneratorWord w = bfs_minimize(nf, Topology::Complete);
    EXPECT_EQ(w.evaluate(), nf);
    EXPECT_LE(w.size(), synthesize_complete(nf).gates.size());
  }
}

TEST(Ghz3Circuit, ReducedBlockIsEquivalent) {
  const Circuit large = parse_circuit(
      "qubits 3\nh 0\nh 1\nh 2\ncz 1 2\ncz 0 2\ncz 0 1\nswap 1 2\ncz 0 2\nh 1\nh 0\n");
  const Circuit block(3, {large.gates.begin() + 3, large.gates.begin() + 8});
  Circuit small(3, {Gate::h(0), Gate::h(1), Gate::h(2)});
  for (const auto &g : synthesize_complete(normalize(block)).gates) small.gates.push_back(g);
  small.gates.push_back(Gate::h(1));
  small.gates.push_back(Gate::h(0));
  EXPECT_LT(small.gates.size(), large.gates.size());
  EXPECT_TRUE(equivalent(large, small));
}

}  // namespace
}  // namespace czs
