//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "generator.h"
#include "molfrag/match.h"
#include "molfrag/smiles.h"
#include "oracles.h"

namespace molfrag {
namespace {

TEST(Match, PatternEqualsTarget) {
  const Molecule m = parse_smiles("CC(=O)Nc1ccccc1");
  const auto map = match_subgraph(m, m, true);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ(map->size(), static_cast<std::size_t>(m.num_atoms()));
}

TEST(Match, EthaneInEthanol) {
  const auto map = match_subgraph(parse_smiles("CC"), parse_smiles("CCO"), true);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ(*map, (std::vector<int> { 0, 1 }));
}

// Ring fusion atoms keep both 6-cycles induced, so benzene does embed in
// naphthalene; the exhaustive oracle settles it.
TEST(Match, BenzeneInNaphthaleneAgreesWithOracle) {
  const Molecule benzene = parse_smiles("c1ccccc1");
  const Molecule naphthalene = parse_smiles("c1ccc2ccccc2c1");
  const auto expected =
      oracle::smallest_induced_match(benzene, naphthalene, true);
  const auto got = match_subgraph(benzene, naphthalene, true);
  ASSERT_EQ(got.has_value(), expected.has_value());
  EXPECT_TRUE(expected.has_value());
  EXPECT_EQ(*got, *expected);
}

TEST(Match, InducedSemanticsRejectsExtraEdges) {
  // Butane chain is not induced in cyclobutane.
  EXPECT_FALSE(match_subgraph(parse_smiles("CCCC"), parse_smiles("C1CCC1"),
                              true));
  EXPECT_TRUE(match_subgraph(parse_smiles("CCC"), parse_smiles("C1CCCC1"), true));
}

TEST(Match, BondOrderAndChargeLabels) {
  EXPECT_FALSE(match_subgraph(parse_smiles("C=C"), parse_smiles("CCC"), true));
  EXPECT_FALSE(match_subgraph(parse_smiles("CN"), parse_smiles("CC[NH3+]"), true));
  EXPECT_TRUE(match_subgraph(parse_smiles("CN"), parse_smiles("CC[NH3+]"), false));
}

TEST(Match, AllowedMaskRestrictsImage) {
  const Molecule target = parse_smiles("CCOCC");
  std::vector<bool> allowed = { false, false, true, true, true };
  const auto map = match_subgraph(parse_smiles("CC"), target, true, allowed);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ(*map, (std::vector<int> { 3, 4 }));
  allowed = { true, false, true, false, true };
  EXPECT_FALSE(match_subgraph(parse_smiles("CC"), target, true, allowed));
}

TEST(Match, AgreesWithExhaustiveOracle) {
  testing::MoleculeGenerator gen(21);
  int found = 0;
  for (int i = 0; i < 400; ++i) {
    const Molecule target = gen.next(12).mol;
    const Molecule source = gen.next(12).mol;
    // Half the patterns are connected pieces of the target itself.
    Molecule pattern = source;
    if (i % 2 == 0 && target.num_atoms() >= 2) {
      const int want = testing::uniform_int(gen.rng(), 2, target.num_atoms());
      std::vector<int> atoms = { testing::uniform_int(gen.rng(), 0, target.num_atoms() - 1) };
      while (static_cast<int>(atoms.size()) < want) {
        std::vector<int> frontier;
        for (int v: atoms)
          for (const Neighbor &nb: target.neighbors(v))
            if (std::find(atoms.begin(), atoms.end(), nb.atom) == atoms.end())
              frontier.push_back(nb.atom);
        if (frontier.empty())
          break;
        atoms.push_back(frontier[testing::uniform_int(gen.rng(), 0, static_cast<int>(frontier.size()) - 1)]);
      }
      pattern = testing::permute(
          oracle::fragment(target, atoms),
          testing::random_permutation(static_cast<int>(atoms.size()), gen.rng()));
      pattern = parse_smiles(write_smiles(pattern));
    }
    for (bool cs: { true, false }) {
      const auto expected = oracle::smallest_induced_match(pattern, target, cs);
      const auto got = match_subgraph(pattern, target, cs);
      ASSERT_EQ(got.has_value(), expected.has_value())
          << write_smiles(pattern) << " in " << write_smiles(target);
      if (got) {
        EXPECT_EQ(*got, *expected);
        ++found;
      }
    }
  }
  EXPECT_GT(found, 100);
}

}  // namespace
}  // namespace molfrag
