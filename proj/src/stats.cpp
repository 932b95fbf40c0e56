//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/stats.h"

#include <omp.h>

#include <algorithm>

#include "molfrag/error.h"
#include "molfrag/rings.h"

namespace molfrag {

DecompositionStats decomposition_stats(std::span<const std::string> ids,
                                       std::span<const Molecule> molecules,
                                       std::span<const Decomposition> decomps) {
  if (ids.size() != molecules.size() || molecules.size() != decomps.size())
    throw Error(ErrorCode::kInvalidInput, "mismatched stats inputs");
  DecompositionStats s;
  s.records.reserve(decomps.size());
  std::int64_t total_fragments = 0;
  std::vector<int> sizes;
  sizes.reserve(decomps.size());
  for (std::size_t i = 0; i < decomps.size(); ++i) {
    const Decomposition &d = decomps[i];
    DecompositionRecordStats r;
    r.id = ids[i];
    r.scheme = d.scheme;
    r.motifs = static_cast<int>(d.motifs.size());
    r.singles = static_cast<int>(d.singles.size());
    r.fragments = r.motifs + r.singles;
    r.atoms = molecules[i].num_atoms();
    total_fragments += r.fragments;
    s.total_atoms += r.atoms;
    s.total_singles += r.singles;
    ++s.fragment_histogram[r.fragments];
    sizes.push_back(r.fragments);
    s.records.push_back(std::move(r));
  }
  if (!sizes.empty()) {
    s.mean_fragments = static_cast<double>(total_fragments)
                       / static_cast<double>(sizes.size());
    std::sort(sizes.begin(), sizes.end());
    const std::size_t mid = sizes.size() / 2;
    s.median_fragments = sizes.size() % 2 == 1
                             ? sizes[mid]
                             : (sizes[mid - 1] + sizes[mid]) / 2.0;
  }
  if (s.total_atoms > 0)
    s.single_atom_rate = static_cast<double>(s.total_singles)
                         / static_cast<double>(s.total_atoms);
  return s;
}

double RingHistogram::mean(int ring_size) const {
  if (molecules == 0 || ring_size < kMinRingSize || ring_size > kMaxRingSize)
    return 0.0;
  return static_cast<double>(counts[ring_size - kMinRingSize])
         / static_cast<double>(molecules);
}

double RingHistogram::overflow_mean() const {
  if (molecules == 0)
    return 0.0;
  return static_cast<double>(overflow) / static_cast<double>(molecules);
}

void RingHistogram::add(const RingHistogram &other) {
  molecules += other.molecules;
  for (std::size_t i = 0; i < counts.size(); ++i)
    counts[i] += other.counts[i];
  overflow += other.overflow;
}

namespace {
void count_rings(const Molecule &mol, RingHistogram &h) {
  ++h.molecules;
  for (const auto &ring: perceive_rings(mol).rings) {
    const int size = static_cast<int>(ring.size());
    if (size > kMaxRingSize)
      ++h.overflow;
    else
      ++h.counts[size - kMinRingSize];
  }
}
}  // namespace

RingHistogram ring_histogram_serial(std::span<const Molecule> molecules) {
  RingHistogram h;
  for (const Molecule &mol: molecules)
    count_rings(mol, h);
  return h;
}

RingHistogram ring_histogram_parallel(std::span<const Molecule> molecules,
                                      int workers) {
  const int threads = std::max(1, workers);
  std::vector<RingHistogram> partial(threads);
  const auto n = static_cast<std::int64_t>(molecules.size());
#pragma omp parallel num_threads(threads)
  {
    RingHistogram &local = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i)
      count_rings(molecules[i], local);
  }
  RingHistogram total;
  for (const RingHistogram &p: partial)
    total.add(p);
  return total;
}

RingHistogram ring_histogram(std::span<const Molecule> molecules, int workers) {
  return workers <= 1 ? ring_histogram_serial(molecules)
                      : ring_histogram_parallel(molecules, workers);
}

VocabComposition vocab_composition(const Vocabulary &vocab) {
  if (vocab.empty())
    throw Error(ErrorCode::kNoMotifs, "vocabulary has no entries");
  VocabComposition c;
  c.entries = vocab.size();
  for (const VocabEntry &e: vocab.entries()) {
    if (e.has_ring)
      ++c.ring_motifs;
    ++c.atom_count_distribution[e.atom_count];
  }
  c.ring_motif_fraction =
      static_cast<double>(c.ring_motifs) / static_cast<double>(c.entries);
  return c;
}

}  // namespace molfrag
