//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>

#include "generator.h"
#include "molfrag/assemble.h"
#include "molfrag/error.h"
#include "molfrag/record.h"
#include "molfrag/smiles.h"
#include "oracles.h"

namespace molfrag {
namespace {

ScoredBondGraph singles(std::vector<Atom> atoms,
                        std::vector<BondCandidate> candidates) {
  ScoredBondGraph g;
  g.atoms = std::move(atoms);
  g.candidates = std::move(candidates);
  return g;
}

std::vector<Atom> carbons(int n) {
  return std::vector<Atom>(n, { Element::kC, 0 });
}

TEST(ValencyCorrect, CarbonTakesTopFour) {
  std::vector<BondCandidate> c;
  const double conf[] = { 0.9, 0.8, 0.7, 0.6, 0.5 };
  for (int i = 0; i < 5; ++i)
    c.push_back({ 0, i + 1, BondOrder::kSingle, conf[i] });
  const auto accepted = valency_correct(singles(carbons(6), c));
  EXPECT_EQ(accepted, (std::vector<int> { 0, 1, 2, 3 }));
}

TEST(ValencyCorrect, NoCandidates) {
  EXPECT_TRUE(valency_correct(singles(carbons(3), {})).empty());
}

TEST(ValencyCorrect, FluorineTakesOne) {
  std::vector<Atom> atoms = carbons(4);
  atoms[0] = { Element::kF, 0 };
  const auto accepted = valency_correct(singles(
      atoms, { { 0, 1, BondOrder::kSingle, 0.4 },
               { 0, 2, BondOrder::kSingle, 0.95 },
               { 0, 3, BondOrder::kSingle, 0.7 } }));
  EXPECT_EQ(accepted, (std::vector<int> { 1 }));
}

TEST(ValencyCorrect, OneBondPerPair) {
  const auto accepted = valency_correct(singles(
      carbons(2), { { 0, 1, BondOrder::kSingle, 0.5 },
                    { 0, 1, BondOrder::kDouble, 0.9 } }));
  EXPECT_EQ(accepted, (std::vector<int> { 1 }));
}

TEST(ValencyCorrect, RespectsMotifBonds) {
  ScoredBondGraph g;
  g.atoms = carbons(3);
  g.atoms[0] = { Element::kO, 0 };
  g.motifs = { { 0, 1 } };
  g.motif_bonds = { { 0, 1, BondOrder::kDouble } };
  g.candidates = { { 0, 2, BondOrder::kSingle, 0.99 },
                   { 1, 2, BondOrder::kSingle, 0.5 } };
  EXPECT_EQ(valency_correct(g), (std::vector<int> { 1 }));
}

TEST(Validate, RejectsBadInput) {
  ScoredBondGraph g;
  g.atoms = carbons(3);
  g.motifs = { { 0, 1 } };
  g.motif_bonds = { { 0, 1, BondOrder::kSingle } };
  g.candidates = { { 0, 1, BondOrder::kSingle, 0.5 } };
  EXPECT_THROW(validate(g), Error);
  g.candidates = { { 0, 2, BondOrder::kSingle, 1.5 } };
  EXPECT_THROW(validate(g), Error);
  g.candidates = { { 0, 2, BondOrder::kSingle, 0.5 },
                   { 2, 0, BondOrder::kSingle, 0.4 } };
  EXPECT_THROW(validate(g), Error);
  g.candidates = { { 2, 2, BondOrder::kSingle, 0.5 } };
  EXPECT_THROW(validate(g), Error);
  g.candidates = {};
  g.motifs = { { 0, 1 }, { 1, 2 } };
  EXPECT_THROW(validate(g), Error);
}

TEST(CycleBreak, MotifRingsUntouched) {
  const Molecule m = parse_smiles("C1CCCCCCC1");
  const std::vector<bool> intra(m.num_bonds(), true);
  const auto r = cycle_break(m, intra, std::vector<double>(m.num_bonds(), 0.1));
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.mol, m);
}

TEST(CycleBreak, FourRingLosesWeakestBond) {
  const Molecule m(carbons(4), { { 0, 1, BondOrder::kSingle },
                                 { 1, 2, BondOrder::kSingle },
                                 { 2, 3, BondOrder::kSingle },
                                 { 3, 0, BondOrder::kSingle } });
  const auto r = cycle_break(m, std::vector<bool>(4, false), { 0.9, 0.8, 0.7, 0.6 });
  EXPECT_EQ(r.removed, (std::vector<int> { 3 }));
  EXPECT_EQ(r.mol.num_bonds(), 3);
  EXPECT_TRUE(r.mol.is_connected());
}

TEST(CycleBreak, FusedSixRingsSharingThreeAtoms) {
  // Shared path 0-1-2; ring A adds 3,4,5 and ring B adds 6,7,8.
  const std::vector<std::pair<int, int>> edges = {
    { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 },
    { 5, 0 }, { 2, 6 }, { 6, 7 }, { 7, 8 }, { 8, 0 },
  };
  std::vector<Bond> bonds;
  for (auto [u, v]: edges)
    bonds.push_back({ u, v, BondOrder::kSingle });
  const Molecule m(carbons(9), bonds);
  const std::vector<double> conf = { 0.9, 0.95, 0.8, 0.85, 0.3, 0.7,
                                     0.88, 0.6, 0.75, 0.65 };
  const auto r = cycle_break(m, std::vector<bool>(edges.size(), false), conf);
  ASSERT_FALSE(r.removed.empty());
  EXPECT_EQ(r.removed.front(), 4);
  AssemblyResult as { r.mol, r.intra, r.mol.is_connected() };
  ScoredBondGraph g;
  g.atoms = carbons(9);
  EXPECT_TRUE(oracle::assembly_violations(g, as).empty());
  // Deleting one bond of ring A leaves ring B intact.
  EXPECT_EQ(r.removed.size(), 1u);
}

TEST(CycleBreak, AllowsFusedFiveSixSystem) {
  // Indole-like skeleton formed entirely from inter bonds shares two atoms.
  const Molecule m = parse_smiles("C1CCC2CCCC2C1");
  const auto r = cycle_break(m, std::vector<bool>(m.num_bonds(), false),
                             std::vector<double>(m.num_bonds(), 0.5));
  EXPECT_TRUE(r.removed.empty());
}

TEST(Assemble, FourCycleExample) {
  ScoredBondGraph g = singles(carbons(4), { { 0, 1, BondOrder::kSingle, 0.9 },
                                            { 1, 2, BondOrder::kSingle, 0.8 },
                                            { 2, 3, BondOrder::kSingle, 0.7 },
                                            { 3, 0, BondOrder::kSingle, 0.6 } });
  for (AssemblyOrder o: { AssemblyOrder::kValencyFirst, AssemblyOrder::kCycleFirst }) {
    const AssemblyResult r = assemble(g, o);
    EXPECT_EQ(write_smiles(r.mol), "CCCC");
    EXPECT_TRUE(r.connected);
  }
}

TEST(Assemble, RandomGraphsSatisfyConstraints) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 500; ++i) {
    const ScoredBondGraph g = testing::random_scored_graph(rng);
    EXPECT_TRUE(oracle::valence_violations(g, valency_correct(g)).empty());
    for (AssemblyOrder o: { AssemblyOrder::kValencyFirst, AssemblyOrder::kCycleFirst }) {
      const AssemblyResult r = assemble(g, o);
      const auto errors = oracle::assembly_violations(g, r);
      EXPECT_TRUE(errors.empty()) << errors.front() << "\n"
                                  << scored_graph_record("g", g);
      EXPECT_EQ(r.connected, r.mol.is_connected());
      EXPECT_EQ(assemble(g, o).mol, r.mol);
    }
  }
}

TEST(Assemble, RaisingConfidenceKeepsAcceptance) {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 200; ++i) {
    ScoredBondGraph g = testing::random_scored_graph(rng);
    const auto accepted = valency_correct(g);
    for (int a: accepted) {
      ScoredBondGraph h = g;
      h.candidates[a].confidence =
          std::min(1.0, h.candidates[a].confidence + 0.25);
      const auto again = valency_correct(h);
      EXPECT_NE(std::find(again.begin(), again.end(), a), again.end());
    }
  }
}

TEST(Record, ScoredGraphRoundTrip) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) {
    const ScoredBondGraph g = testing::random_scored_graph(rng);
    std::string id;
    const ScoredBondGraph back = parse_scored_graph(scored_graph_record("x", g), id);
    EXPECT_EQ(id, "x");
    EXPECT_EQ(back.atoms, g.atoms);
    EXPECT_EQ(back.motifs, g.motifs);
    EXPECT_EQ(back.motif_bonds, g.motif_bonds);
    ASSERT_EQ(back.candidates.size(), g.candidates.size());
    for (std::size_t c = 0; c < g.candidates.size(); ++c)
      EXPECT_EQ(back.candidates[c].confidence, g.candidates[c].confidence);
  }
}

}  // namespace
}  // namespace molfrag
