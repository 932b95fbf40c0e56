//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_DECOMPOSE_H_
#define MOLFRAG_DECOMPOSE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "molfrag/molecule.h"
#include "molfrag/vocab.h"

namespace molfrag {

enum class Scheme { kBbb, kPsm, kSubcover };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

struct MotifOccurrence {
  std::vector<int> atoms;  // ascending
  int entry = -1;          // vocabulary index

  friend bool operator==(const MotifOccurrence &,
                         const MotifOccurrence &) = default;
};

// Partition of a molecule's atoms into motifs and single atoms, with the
// matching split of its bonds. Motifs are ordered by smallest atom; singles,
// intra_bonds and inter_bonds are ascending.
struct Decomposition {
  Scheme scheme = Scheme::kBbb;
  std::vector<MotifOccurrence> motifs;
  std::vector<int> singles;
  std::vector<int> intra_bonds;
  std::vector<int> inter_bonds;

  int size() const {
    return static_cast<int>(motifs.size() + singles.size());
  }

  friend bool operator==(const Decomposition &,
                         const Decomposition &) = default;
};

// Connected pieces left after cutting every non-ring bond that touches a ring
// atom. Each piece is an ascending atom list; pieces are ordered by smallest
// atom.
std::vector<std::vector<int>> bbb_fragment(const Molecule &mol);

Decomposition bbb_decompose(const Molecule &mol, const Vocabulary &vocab);

// Throws Error(kSchemeMismatch) unless the vocabulary was mined with PSM.
Decomposition psm_decompose(const Molecule &mol, const Vocabulary &vocab);

// Throws Error(kSchemeMismatch) unless the vocabulary was mined with BBB.
Decomposition subcover_decompose(const Molecule &mol, const Vocabulary &vocab);

Decomposition decompose(const Molecule &mol, const Vocabulary &vocab,
                        Scheme scheme);

struct MotifSearchResult {
  std::vector<MotifOccurrence> motifs;
  std::vector<int> leftovers;
};

// Greedy extraction of vocabulary motifs from the connected atom set `frag`.
// Each step takes the first entry in the vocabulary's search order that has
// a charge-insensitive induced embedding in the remainder, removes the
// embedded atoms, and continues on each remaining component separately.
MotifSearchResult find_m_in_f(const Molecule &mol, const std::vector<int> &frag,
                              const Vocabulary &vocab);

// Fills intra/inter bonds and sorts the parts into canonical order.
void finalize_decomposition(const Molecule &mol, Decomposition &d);

}  // namespace molfrag

#endif  // MOLFRAG_DECOMPOSE_H_
