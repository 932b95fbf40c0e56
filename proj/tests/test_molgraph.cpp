//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "generator.h"
#include "molfrag/canon.h"
#include "molfrag/error.h"
#include "molfrag/rings.h"
#include "molfrag/smiles.h"
#include "oracles.h"

namespace molfrag {
namespace {

using testing::fuzz_corpus;
using testing::MoleculeGenerator;

int count_order(const Molecule &m, BondOrder o) {
  return static_cast<int>(std::count_if(m.bonds().begin(), m.bonds().end(),
                                        [&](const Bond &b) {
                                          return b.order == o;
                                        }));
}

ErrorCode parse_error(const std::string &s) {
  try {
    parse_smiles(s);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << s;
  return ErrorCode::kIo;
}

TEST(Element, ValenceTable) {
  EXPECT_EQ(max_valence(Element::kC, 0), 4);
  EXPECT_EQ(max_valence(Element::kN, 0), 3);
  EXPECT_EQ(max_valence(Element::kN, 1), 4);
  EXPECT_EQ(max_valence(Element::kN, -1), 2);
  EXPECT_EQ(max_valence(Element::kO, 1), 3);
  EXPECT_EQ(max_valence(Element::kO, -1), 1);
  EXPECT_EQ(max_valence(Element::kB, 0), 3);
  EXPECT_EQ(max_valence(Element::kF, 0), 1);
  EXPECT_EQ(max_valence(Element::kP, 0), 5);
  EXPECT_EQ(max_valence(Element::kS, 0), 6);
  EXPECT_EQ(max_valence(Element::kSe, 0), 6);
  EXPECT_EQ(max_valence(Element::kSi, 0), 4);
  EXPECT_EQ(allowed_valences(Element::kS, 0).smallest_at_least(3), 4);
}

TEST(Smiles, SingleCarbon) {
  const Molecule m = parse_smiles("C");
  ASSERT_EQ(m.num_atoms(), 1);
  EXPECT_EQ(m.num_bonds(), 0);
  EXPECT_EQ(m.atom(0).element, Element::kC);
  EXPECT_EQ(m.atom(0).formal_charge, 0);
}

TEST(Smiles, BenzeneKekulized) {
  const Molecule m = parse_smiles("c1ccccc1");
  EXPECT_EQ(m.num_atoms(), 6);
  EXPECT_EQ(m.num_bonds(), 6);
  EXPECT_EQ(count_order(m, BondOrder::kDouble), 3);
  EXPECT_EQ(count_order(m, BondOrder::kSingle), 3);
  for (int v = 0; v < 6; ++v)
    EXPECT_EQ(m.bond_order_sum(v), 3);
}

TEST(Smiles, Acetate) {
  const Molecule m = parse_smiles("CC(=O)[O-]");
  EXPECT_EQ(m.num_atoms(), 4);
  EXPECT_EQ(count_order(m, BondOrder::kDouble), 1);
  int anions = 0;
  for (const Atom &a: m.atoms())
    anions += a.element == Element::kO && a.formal_charge == -1;
  EXPECT_EQ(anions, 1);
}

TEST(Smiles, BracketHydrogenFoldedAndStereoDropped) {
  const Molecule m = parse_smiles("C[C@@H](N)/C=C/[NH3+]");
  EXPECT_EQ(m.num_atoms(), 6);
  EXPECT_EQ(m.atom(5).formal_charge, 1);
  EXPECT_EQ(parse_smiles("[CH4]").num_atoms(), 1);
  EXPECT_EQ(parse_smiles("C%12CC%12").num_bonds(), 3);
}

TEST(Smiles, PyrroleNeedsExplicitHydrogen) {
  EXPECT_EQ(parse_smiles("c1cc[nH]c1").num_atoms(), 5);
  EXPECT_EQ(parse_error("c1cccc1"), ErrorCode::kKekulization);
}

TEST(Smiles, Errors) {
  EXPECT_EQ(parse_error("CC.O"), ErrorCode::kMultiComponent);
  EXPECT_EQ(parse_error("C1CC"), ErrorCode::kUnclosedRing);
  EXPECT_EQ(parse_error("[13CH4]"), ErrorCode::kUnsupportedFeature);
  EXPECT_EQ(parse_error("[Xe]"), ErrorCode::kUnsupportedElement);
  EXPECT_EQ(parse_error("C(C"), ErrorCode::kSyntax);
  EXPECT_EQ(parse_error("CC$C"), ErrorCode::kUnsupportedFeature);
  EXPECT_EQ(parse_error("FC(F)(F)(F)F"), ErrorCode::kValence);
  EXPECT_EQ(parse_error(""), ErrorCode::kSyntax);
  try {
    parse_smiles("CC?C");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.position(), 2);
  }
}

TEST(Smiles, WriterSingleAtom) {
  EXPECT_EQ(write_smiles(parse_smiles("C")), "C");
}

TEST(Smiles, WriterIsCanonicalForBenzene) {
  EXPECT_EQ(write_smiles(parse_smiles("c1ccccc1")),
            write_smiles(parse_smiles("C1=CC=CC=C1")));
}

TEST(Smiles, RoundTripOnFuzzCorpus) {
  for (const std::string &s: fuzz_corpus(300, 30, 11)) {
    const Molecule m = parse_smiles(s);
    const std::string w = write_smiles(m);
    const Molecule back = parse_smiles(w);
    EXPECT_TRUE(oracle::isomorphic(m, back, true)) << s << " -> " << w;
    EXPECT_EQ(write_smiles(back), w) << s;
  }
}

TEST(Smiles, KekulizationWithinValence) {
  for (const std::string &s: fuzz_corpus(500, 30, 12)) {
    const Molecule m = parse_smiles(s);
    EXPECT_TRUE(m.is_connected()) << s;
    for (int v = 0; v < m.num_atoms(); ++v)
      EXPECT_LE(m.bond_order_sum(v),
                max_valence(m.atom(v).element, m.atom(v).formal_charge))
          << s;
  }
}

TEST(Smiles, RandomWritersAgreeOnCanonicalForm) {
  MoleculeGenerator gen(13);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen.next(25);
    const std::string a = testing::random_smiles(g, gen.rng());
    const std::string b = testing::random_smiles(g, gen.rng());
    EXPECT_EQ(write_smiles(parse_smiles(a)), write_smiles(parse_smiles(b)))
        << a << " vs " << b;
  }
}

TEST(Molecule, RejectsInvalidGraphs) {
  EXPECT_THROW(Molecule({ { Element::kC, 0 } }, { { 0, 0, BondOrder::kSingle } }),
               Error);
  EXPECT_THROW(Molecule({ { Element::kC, 0 }, { Element::kC, 0 } },
                        { { 0, 1, BondOrder::kSingle },
                          { 1, 0, BondOrder::kDouble } }),
               Error);
  EXPECT_THROW(Molecule({ { Element::kC, 9 } }, {}), Error);
}

TEST(Rings, Ethanol) {
  const RingInfo r = perceive_rings(parse_smiles("CCO"));
  EXPECT_TRUE(r.rings.empty());
  EXPECT_EQ(std::count(r.bond_in_ring.begin(), r.bond_in_ring.end(), true), 0);
  EXPECT_EQ(std::count(r.atom_in_ring.begin(), r.atom_in_ring.end(), true), 0);
}

TEST(Rings, Cyclohexane) {
  const RingInfo r = perceive_rings(parse_smiles("C1CCCCC1"));
  ASSERT_EQ(r.rings.size(), 1u);
  EXPECT_EQ(r.rings[0].size(), 6u);
  EXPECT_EQ(std::count(r.bond_in_ring.begin(), r.bond_in_ring.end(), true), 6);
}

TEST(Rings, NaphthaleneAgainstCycleEnumeration) {
  const Molecule m = parse_smiles("c1ccc2ccccc2c1");
  const RingInfo r = perceive_rings(m);
  EXPECT_EQ(std::count(r.bond_in_ring.begin(), r.bond_in_ring.end(), true), 11);
  ASSERT_EQ(r.rings.size(), 2u);
  EXPECT_EQ(r.rings[0].size(), 6u);
  EXPECT_EQ(r.rings[1].size(), 6u);
  // Two 6-cycles and the 10-cycle around the outside.
  EXPECT_EQ(oracle::simple_cycles(m).size(), 3u);
  EXPECT_EQ(oracle::minimum_cycle_basis_length(m), 12);
}

TEST(Rings, MatchesOraclesOnFuzzCorpus) {
  for (const std::string &s: fuzz_corpus(400, 22, 14)) {
    const Molecule m = parse_smiles(s);
    const RingInfo r = perceive_rings(m);
    EXPECT_EQ(r.bond_in_ring, oracle::cycle_bonds(m)) << s;
    for (int v = 0; v < m.num_atoms(); ++v) {
      bool on_ring_bond = false;
      for (const Neighbor &nb: m.neighbors(v))
        on_ring_bond = on_ring_bond || r.bond_in_ring[nb.bond];
      EXPECT_EQ(r.atom_in_ring[v], on_ring_bond) << s;
    }
    EXPECT_EQ(static_cast<int>(r.rings.size()),
              m.num_bonds() - m.num_atoms() + 1)
        << s;
    EXPECT_TRUE(oracle::independent_cycles(m, r.rings)) << s;
    int total = 0;
    for (const auto &ring: r.rings) {
      total += static_cast<int>(ring.size());
      EXPECT_EQ(std::set<int>(ring.begin(), ring.end()).size(), ring.size());
    }
    EXPECT_EQ(total, oracle::minimum_cycle_basis_length(m)) << s;
  }
}

TEST(CanonicalKey, EthanolPermutations) {
  const Molecule m = parse_smiles("CCO");
  const MotifKey k = canonical_key(m, true);
  std::vector<int> perm = { 0, 1, 2 };
  do {
    EXPECT_EQ(canonical_key(testing::permute(m, perm), true), k);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CanonicalKey, ChargeSensitivity) {
  const Molecule a = parse_smiles("C[NH3+]");
  const Molecule b = parse_smiles("CN");
  EXPECT_EQ(canonical_key(a, false), canonical_key(b, false));
  EXPECT_NE(canonical_key(a, true), canonical_key(b, true));
  EXPECT_TRUE(oracle::isomorphic(a, b, false));
  EXPECT_FALSE(oracle::isomorphic(a, b, true));
}

TEST(CanonicalKey, DistinctChains) {
  const Molecule a = parse_smiles("CCO");
  const Molecule b = parse_smiles("CCC");
  EXPECT_NE(canonical_key(a, true), canonical_key(b, true));
  EXPECT_NE(canonical_key(a, false), canonical_key(b, false));
  EXPECT_FALSE(oracle::isomorphic(a, b, false));
}

TEST(CanonicalKey, SubsetOverloadMatchesFragment) {
  const Molecule m = parse_smiles("C1CCCCC1CCO");
  const std::vector<int> atoms = { 6, 7, 8 };
  EXPECT_EQ(canonical_key(m, atoms, true),
            canonical_key(parse_smiles("CCO"), true));
}

TEST(CanonicalKey, DecodesToIsomorphicMolecule) {
  for (const std::string &s: fuzz_corpus(200, 20, 15)) {
    const Molecule m = parse_smiles(s);
    const MotifKey k = canonical_key(m, true);
    const Molecule back = key_to_molecule(k);
    EXPECT_TRUE(oracle::isomorphic(m, back, true)) << s;
    EXPECT_EQ(canonical_key(back, true), k) << s;
  }
}

TEST(CanonicalKey, PermutationInvariantOnFuzzCorpus) {
  MoleculeGenerator gen(16);
  for (int i = 0; i < 150; ++i) {
    const Molecule m = gen.next(24).mol;
    const MotifKey cs = canonical_key(m, true);
    const MotifKey ci = canonical_key(m, false);
    for (int r = 0; r < 10; ++r) {
      const Molecule p =
          testing::permute(m, testing::random_permutation(m.num_atoms(), gen.rng()));
      EXPECT_EQ(canonical_key(p, true), cs);
      EXPECT_EQ(canonical_key(p, false), ci);
    }
  }
}

TEST(CanonicalKey, HighlySymmetricGraphs) {
  for (const char *s: { "C12C3C4C1C5C2C3C45", "C1CC2CCC1CC2", "C(C)(C)(C)C",
                        "C1CCC12CCC2", "c1ccc2cc3ccccc3cc2c1" }) {
    const Molecule m = parse_smiles(s);
    std::mt19937_64 rng(17);
    const MotifKey k = canonical_key(m, true);
    for (int r = 0; r < 50; ++r)
      EXPECT_EQ(canonical_key(testing::permute(m, testing::random_permutation(m.num_atoms(), rng)),
                              true),
                k)
          << s;
  }
}

TEST(CanonicalKey, EqualityMatchesIsomorphismOnSmallFragments) {
  MoleculeGenerator gen(18);
  std::vector<Molecule> pool;
  for (int i = 0; i < 120; ++i) {
    const Molecule m = gen.next(8).mol;
    pool.push_back(m);
    pool.push_back(testing::permute(
        m, testing::random_permutation(m.num_atoms(), gen.rng())));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      for (bool cs: { true, false }) {
        EXPECT_EQ(canonical_key(pool[i], cs) == canonical_key(pool[j], cs),
                  oracle::isomorphic(pool[i], pool[j], cs))
            << write_smiles(pool[i]) << " / " << write_smiles(pool[j]);
      }
    }
  }
}

}  // namespace
}  // namespace molfrag
