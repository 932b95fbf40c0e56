//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_VOCAB_H_
#define MOLFRAG_VOCAB_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "molfrag/canon.h"
#include "molfrag/molecule.h"

namespace molfrag {

enum class VocabScheme { kBbb, kPsm };

std::string_view scheme_name(VocabScheme s);

struct VocabEntry {
  MotifKey key;  // charge-sensitive
  std::string smiles;
  std::int64_t count = 0;
  int atom_count = 0;
  bool has_ring = false;

  friend bool operator==(const VocabEntry &, const VocabEntry &) = default;
};

// Builds an entry for the fragment identified by a charge-sensitive key.
VocabEntry make_entry(const MotifKey &key, std::int64_t count);

// Ranked motif vocabulary. Entries keep the order they were given in: rank
// order for BBB, mining order for PSM.
class Vocabulary {
public:
  Vocabulary() = default;
  Vocabulary(VocabScheme scheme, std::vector<VocabEntry> entries,
             std::string corpus_hash = {});

  VocabScheme scheme() const { return scheme_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  const std::vector<VocabEntry> &entries() const { return entries_; }
  const VocabEntry &entry(int i) const { return entries_[i]; }
  const std::string &corpus_hash() const { return corpus_hash_; }

  // Index of the entry with this charge-sensitive key, or -1.
  int find(const MotifKey &key) const;

  // Entry molecule, atoms in canonical order.
  const Molecule &pattern(int i) const { return patterns_[i]; }

  // Entry indices by atom count desc, then count desc, then key asc.
  const std::vector<int> &search_order() const { return search_order_; }

  friend bool operator==(const Vocabulary &lhs, const Vocabulary &rhs) {
    return lhs.scheme_ == rhs.scheme_ && lhs.entries_ == rhs.entries_
           && lhs.corpus_hash_ == rhs.corpus_hash_;
  }

private:
  VocabScheme scheme_ = VocabScheme::kBbb;
  std::vector<VocabEntry> entries_;
  std::string corpus_hash_;
  std::vector<Molecule> patterns_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> search_order_;
};

struct MiningResult {
  Vocabulary vocab;
  int requested_k = 0;
  // Number of distinct eligible motifs seen (BBB) or mining iterations that
  // found a candidate (PSM).
  std::int64_t available = 0;
};

// Occurrence counts of charge-sensitive keys of BBB fragments with at least
// three atoms.
using MotifCounts = std::unordered_map<std::string, std::int64_t>;

MotifCounts bbb_count_serial(std::span<const Molecule> corpus);
MotifCounts bbb_count_parallel(std::span<const Molecule> corpus, int workers);

// Top k motifs by (count desc, key asc).
Vocabulary rank_bbb_counts(const MotifCounts &counts, int k,
                           std::string corpus_hash = {});

MiningResult bbb_build_vocab(std::span<const Molecule> corpus, int k,
                             int workers = 1, std::string corpus_hash = {});

// Incremental miner: per-molecule candidate lists, with recomputation of
// the molecules touched by each new motif spread over `workers` threads.
MiningResult psm_build_vocab(std::span<const Molecule> corpus, int k,
                             int workers = 1, std::string corpus_hash = {});

// Straightforward miner that recounts every candidate on every iteration.
MiningResult psm_build_vocab_reference(std::span<const Molecule> corpus, int k);

// Partition state used by PSM mining: frag[v] is the smallest atom of the
// fragment holding v.
struct PsmState {
  std::vector<int> frag;
};

PsmState psm_initial_state(const Molecule &mol);

// Adjacent fragment pairs (a, b), a < b, by fragment representative.
std::vector<std::pair<int, int>> psm_adjacent_pairs(const Molecule &mol,
                                                    const PsmState &state);

// Atoms of the union of two fragments, ascending.
std::vector<int> psm_merged_atoms(const PsmState &state, int a, int b);

// Merges every pair, scanned in (a, b) order, whose union has key `motif`
// and whose fragments were not already merged during this scan.
// Returns true if anything changed.
bool psm_apply_motif(const Molecule &mol, PsmState &state,
                     const MotifKey &motif);

void save_vocab(const Vocabulary &vocab, std::ostream &out,
                const std::string &config_fingerprint = {});
Vocabulary load_vocab(std::istream &in);

void save_vocab_file(const Vocabulary &vocab, const std::string &path,
                     const std::string &config_fingerprint = {});
Vocabulary load_vocab_file(const std::string &path);

}  // namespace molfrag

#endif  // MOLFRAG_VOCAB_H_
