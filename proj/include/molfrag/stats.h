//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_STATS_H_
#define MOLFRAG_STATS_H_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "molfrag/decompose.h"
#include "molfrag/molecule.h"
#include "molfrag/vocab.h"

namespace molfrag {

struct DecompositionRecordStats {
  std::string id;
  Scheme scheme = Scheme::kBbb;
  int fragments = 0;
  int motifs = 0;
  int singles = 0;
  int atoms = 0;
};

struct DecompositionStats {
  std::vector<DecompositionRecordStats> records;
  double mean_fragments = 0.0;
  double median_fragments = 0.0;
  std::map<int, std::int64_t> fragment_histogram;
  std::int64_t total_atoms = 0;
  std::int64_t total_singles = 0;
  double single_atom_rate = 0.0;
};

// `ids`, `molecules` and `decompositions` are parallel arrays.
DecompositionStats decomposition_stats(std::span<const std::string> ids,
                                       std::span<const Molecule> molecules,
                                       std::span<const Decomposition> decomps);

inline constexpr int kMinRingSize = 3;
inline constexpr int kMaxRingSize = 20;

struct RingHistogram {
  std::int64_t molecules = 0;
  // counts[r - kMinRingSize] for ring sizes 3..20.
  std::array<std::int64_t, kMaxRingSize - kMinRingSize + 1> counts {};
  std::int64_t overflow = 0;

  double mean(int ring_size) const;
  double overflow_mean() const;
  void add(const RingHistogram &other);

  friend bool operator==(const RingHistogram &,
                         const RingHistogram &) = default;
};

RingHistogram ring_histogram_serial(std::span<const Molecule> molecules);
RingHistogram ring_histogram_parallel(std::span<const Molecule> molecules,
                                      int workers);
RingHistogram ring_histogram(std::span<const Molecule> molecules,
                             int workers = 1);

struct VocabComposition {
  int entries = 0;
  int ring_motifs = 0;
  double ring_motif_fraction = 0.0;
  std::map<int, int> atom_count_distribution;
};

// Throws Error(kNoMotifs) for an empty vocabulary.
VocabComposition vocab_composition(const Vocabulary &vocab);

}  // namespace molfrag

#endif  // MOLFRAG_STATS_H_
