//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "generator.h"
#include "molfrag/canon.h"
#include "molfrag/decompose.h"
#include "molfrag/error.h"
#include "molfrag/smiles.h"
#include "oracles.h"

namespace molfrag {
namespace {

std::vector<Molecule> parse_all(const std::vector<std::string> &smiles) {
  std::vector<Molecule> out;
  for (const auto &s: smiles)
    out.push_back(parse_smiles(s));
  return out;
}

std::string canon(const std::string &s) {
  return write_smiles(parse_smiles(s));
}

ErrorCode load_error(const std::string &text) {
  std::istringstream in(text);
  try {
    load_vocab(in);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "loaded without error";
  return ErrorCode::kIo;
}

TEST(BbbVocab, CyclohexaneCountedTwice) {
  const auto r = bbb_build_vocab(parse_all({ "C1CCCCC1C", "C1CCCCC1O" }), 1);
  ASSERT_EQ(r.vocab.size(), 1);
  EXPECT_EQ(r.vocab.entry(0).smiles, canon("C1CCCCC1"));
  EXPECT_EQ(r.vocab.entry(0).count, 2);
  EXPECT_TRUE(r.vocab.entry(0).has_ring);
}

TEST(BbbVocab, TwoAtomMoleculesGiveNothing) {
  const auto r = bbb_build_vocab(parse_all({ "CC", "CO", "C=N" }), 5);
  EXPECT_TRUE(r.vocab.empty());
  EXPECT_EQ(r.available, 0);
}

TEST(BbbVocab, WholeAcyclicMolecule) {
  const auto r = bbb_build_vocab(parse_all({ "CCO" }), 1);
  ASSERT_EQ(r.vocab.size(), 1);
  EXPECT_EQ(r.vocab.entry(0).smiles, canon("CCO"));
  EXPECT_EQ(r.vocab.entry(0).count, 1);
}

TEST(BbbVocab, Errors) {
  EXPECT_THROW(bbb_build_vocab(parse_all({ "CCO" }), 0), Error);
  try {
    bbb_build_vocab({}, 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

class CorpusFixture: public ::testing::Test {
protected:
  static void SetUpTestSuite() {
    corpus_ = parse_all(testing::fuzz_corpus(600, 30, 51));
  }
  static void TearDownTestSuite() { corpus_.clear(); }
  static std::vector<Molecule> corpus_;
};
std::vector<Molecule> CorpusFixture::corpus_;

TEST_F(CorpusFixture, BbbInvariants) {
  const auto r = bbb_build_vocab(corpus_, 50);
  const Vocabulary &v = r.vocab;
  ASSERT_EQ(v.size(), 50);
  for (int i = 0; i < v.size(); ++i) {
    EXPECT_GE(v.entry(i).atom_count, 3);
    EXPECT_GT(v.entry(i).count, 0);
    EXPECT_EQ(canonical_key(parse_smiles(v.entry(i).smiles), true),
              v.entry(i).key);
    if (i > 0) {
      const auto &a = v.entry(i - 1);
      const auto &b = v.entry(i);
      EXPECT_TRUE(a.count > b.count || (a.count == b.count && a.key < b.key));
    }
  }
}

TEST_F(CorpusFixture, BbbPrefixMonotonicity) {
  const Vocabulary big = bbb_build_vocab(corpus_, 60).vocab;
  for (int k: { 1, 5, 17, 40 }) {
    const Vocabulary small = bbb_build_vocab(corpus_, k).vocab;
    ASSERT_EQ(small.size(), k);
    for (int i = 0; i < k; ++i)
      EXPECT_EQ(small.entry(i), big.entry(i));
  }
}

TEST_F(CorpusFixture, BbbOccurrenceConservation) {
  const MotifCounts counts = bbb_count_serial(corpus_);
  std::int64_t total = 0;
  for (const auto &[key, c]: counts)
    total += c;
  std::int64_t occurrences = 0;
  for (const Molecule &m: corpus_)
    for (const auto &f: oracle::bbb_fragments(m))
      occurrences += f.size() >= 3;
  EXPECT_EQ(total, occurrences);
}

TEST_F(CorpusFixture, BbbCountsMatchIsomorphismOracle) {
  const std::vector<Molecule> sample(corpus_.begin(), corpus_.begin() + 150);
  const MotifCounts counts = bbb_count_serial(sample);
  const auto groups = oracle::bbb_counts(sample);
  ASSERT_EQ(groups.size(), counts.size());
  for (const auto &g: groups) {
    const auto it = counts.find(canonical_key(g.fragment, true).bytes);
    ASSERT_NE(it, counts.end());
    EXPECT_EQ(it->second, g.count);
  }
}

TEST_F(CorpusFixture, BbbWorkerCountIrrelevant) {
  const MotifCounts serial = bbb_count_serial(corpus_);
  for (int w: { 1, 2, 3, 8 })
    EXPECT_EQ(bbb_count_parallel(corpus_, w), serial);
  EXPECT_EQ(bbb_build_vocab(corpus_, 30, 1).vocab,
            bbb_build_vocab(corpus_, 30, 8).vocab);
}

TEST(PsmVocab, FirstMotifIsCC) {
  const auto r = psm_build_vocab(parse_all({ "CCO", "CCC" }), 1);
  ASSERT_EQ(r.vocab.size(), 1);
  EXPECT_EQ(r.vocab.entry(0).smiles, canon("CC"));
  EXPECT_EQ(r.vocab.entry(0).count, 3);
}

TEST(PsmVocab, ExhaustedAfterOneMerge) {
  const auto r = psm_build_vocab(parse_all({ "CC" }), 2);
  EXPECT_EQ(r.vocab.size(), 1);
  EXPECT_EQ(r.requested_k, 2);
  EXPECT_EQ(r.available, 1);
}

TEST_F(CorpusFixture, PsmIncrementalMatchesReference) {
  const std::vector<Molecule> sample(corpus_.begin(), corpus_.begin() + 200);
  const Vocabulary ref = psm_build_vocab_reference(sample, 25).vocab;
  for (int w: { 1, 2, 8 })
    EXPECT_EQ(psm_build_vocab(sample, 25, w).vocab, ref);
}

TEST_F(CorpusFixture, PsmPrefixAndCountBound) {
  const Vocabulary big = psm_build_vocab(corpus_, 40).vocab;
  const Vocabulary small = psm_build_vocab(corpus_, 15).vocab;
  ASSERT_EQ(small.size(), 15);
  for (int i = 0; i < small.size(); ++i)
    EXPECT_EQ(small.entry(i), big.entry(i));
  std::int64_t bonds = 0;
  for (const Molecule &m: corpus_)
    bonds += m.num_bonds();
  for (const auto &e: big.entries()) {
    EXPECT_LE(e.count, bonds);
    EXPECT_GE(e.atom_count, 2);
  }
}

TEST(PsmVocab, MatchesExhaustiveOracleOnToyCorpora) {
  testing::MoleculeGenerator gen(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = testing::uniform_int(gen.rng(), 1, 5);
    std::vector<Molecule> corpus;
    for (int i = 0; i < n; ++i)
      corpus.push_back(gen.next(6).mol);
    const int k = testing::uniform_int(gen.rng(), 1, 4);
    const auto want = oracle::psm_mine(corpus, k);
    const Vocabulary got = psm_build_vocab(corpus, k).vocab;
    ASSERT_EQ(got.size(), static_cast<int>(want.size()));
    for (int i = 0; i < got.size(); ++i) {
      EXPECT_TRUE(oracle::isomorphic(parse_smiles(got.entry(i).smiles),
                                     want[i].fragment, true));
      EXPECT_EQ(got.entry(i).count, want[i].count);
    }
  }
}

TEST(PsmApply, MergesLeftToRightWithoutReuse) {
  const Molecule m = parse_smiles("CCCC");
  PsmState s = psm_initial_state(m);
  EXPECT_TRUE(psm_apply_motif(m, s, canonical_key(parse_smiles("CC"), true)));
  EXPECT_EQ(s.frag, (std::vector<int> { 0, 0, 2, 2 }));
  EXPECT_FALSE(psm_apply_motif(m, s, canonical_key(parse_smiles("CO"), true)));
}

TEST(VocabIo, RoundTrip) {
  const auto r = bbb_build_vocab(
      parse_all({ "C1CCCCC1C", "C1CCCCC1O", "c1ccccc1CCN", "CCOC(=O)C" }), 10,
      1, "abc123");
  std::stringstream buf;
  save_vocab(r.vocab, buf, "cfg");
  const Vocabulary back = load_vocab(buf);
  EXPECT_EQ(back, r.vocab);
  EXPECT_EQ(back.corpus_hash(), "abc123");
}

TEST(VocabIo, PsmRoundTrip) {
  const auto r = psm_build_vocab(parse_all({ "CCO", "CCC", "c1ccccc1N" }), 6);
  std::stringstream buf;
  save_vocab(r.vocab, buf);
  EXPECT_EQ(load_vocab(buf), r.vocab);
}

TEST(VocabIo, RejectsBadFiles) {
  const std::string header =
      R"({"format_version":1,"scheme":"bbb","corpus_hash":"","k":2,"config":""})"
      "\n";
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n1\tCCO\t2\t3\t0\n"),
            ErrorCode::kMalformedVocab);
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n2\tOCC\t2\t3\t0\n"),
            ErrorCode::kDuplicateKey);
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n2\tCC\t2\t2\t0\n"),
            ErrorCode::kMalformedVocab);
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n2\tCCN\t0\t3\t0\n"),
            ErrorCode::kMalformedVocab);
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n2\tC1CC1\t2\t3\t0\n"),
            ErrorCode::kMalformedVocab);
  EXPECT_EQ(load_error(header + "1\tCCO\t3\t3\t0\n"), ErrorCode::kMalformedVocab);
  EXPECT_EQ(load_error("not json\n"), ErrorCode::kMalformedVocab);
  EXPECT_EQ(
      load_error(
          R"({"format_version":9,"scheme":"bbb","corpus_hash":"","k":0,"config":""})"
          "\n"),
      ErrorCode::kVersionMismatch);
}

TEST(VocabIo, EmptyVocabularyLoads) {
  std::istringstream in(
      R"({"format_version":1,"scheme":"bbb","corpus_hash":"","k":0,"config":""})"
      "\n");
  EXPECT_TRUE(load_vocab(in).empty());
}

TEST(VocabIo, BbbFileRejectedByPsmDecompose) {
  const auto r = bbb_build_vocab(parse_all({ "C1CCCCC1C", "C1CCCCC1O" }), 1);
  std::stringstream buf;
  save_vocab(r.vocab, buf);
  const Vocabulary back = load_vocab(buf);
  try {
    psm_decompose(parse_smiles("C1CCCCC1C"), back);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemeMismatch);
  }
}

TEST(Vocabulary, ConstructorChecks) {
  VocabEntry e = make_entry(canonical_key(parse_smiles("CCO"), true), 2);
  EXPECT_THROW(Vocabulary(VocabScheme::kBbb, { e, e }), Error);
  VocabEntry bad = e;
  bad.smiles = "CCC";
  EXPECT_THROW(Vocabulary(VocabScheme::kBbb, { bad }), Error);
}

TEST(Vocabulary, SearchOrder) {
  std::vector<VocabEntry> entries;
  for (const auto &[s, c]: std::vector<std::pair<std::string, int>> {
           { "CC", 50 }, { "CCO", 10 }, { "CCC", 10 }, { "CCCC", 1 } })
    entries.push_back(make_entry(canonical_key(parse_smiles(s), true), c));
  const Vocabulary v(VocabScheme::kPsm, entries);
  ASSERT_EQ(v.search_order().size(), 4u);
  EXPECT_EQ(v.search_order().front(), 3);
  EXPECT_EQ(v.search_order().back(), 0);
}

}  // namespace
}  // namespace molfrag
