//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_ASSEMBLE_H_
#define MOLFRAG_ASSEMBLE_H_

#include <string_view>
#include <vector>

#include "molfrag/decompose.h"
#include "molfrag/molecule.h"

namespace molfrag {

struct BondCandidate {
  int u = 0;
  int v = 0;
  BondOrder order = BondOrder::kSingle;
  double confidence = 0.0;
};

// Atoms grouped into motifs with fixed internal bonds. Atoms outside every
// motif are single atoms. Candidates are scored bonds between atoms of
// different motifs or single atoms.
struct ScoredBondGraph {
  std::vector<Atom> atoms;
  std::vector<std::vector<int>> motifs;
  std::vector<Bond> motif_bonds;
  std::vector<BondCandidate> candidates;
};

// Throws Error(kInvalidInput) on overlapping motifs, motif bonds that leave
// their motif, candidates inside a motif or on the same atom, duplicate
// (pair, order) candidates, confidences outside [0, 1], or motif bonds that
// already exceed a valence.
void validate(const ScoredBondGraph &g);

// Accepts candidates greedily by confidence (descending; ties by (u, v, order)
// ascending) when both atoms have enough valence left and the pair is not
// already bonded. Returns accepted candidate indices in acceptance order.
std::vector<int> valency_correct(const ScoredBondGraph &g);

struct CycleBreakResult {
  Molecule mol;
  std::vector<bool> intra;   // per bond of `mol`
  std::vector<int> removed;  // input bond indices, in deletion order
};

// Deletes inter bonds until every ring of the smallest-ring basis that holds
// an inter bond has 5 or 6 atoms and no two such rings share more than two
// atoms. Each step removes the lowest-confidence inter bond (ties by lower
// (u, v)) among the violating rings. `confidence` is indexed by bond and is
// ignored for intra bonds.
CycleBreakResult cycle_break(const Molecule &mol, const std::vector<bool> &intra,
                             const std::vector<double> &confidence);

CycleBreakResult cycle_break(const Molecule &mol, const Decomposition &d,
                             const std::vector<double> &confidence);

enum class AssemblyOrder { kValencyFirst, kCycleFirst };

std::string_view order_name(AssemblyOrder o);

struct AssemblyResult {
  Molecule mol;
  std::vector<bool> intra;
  bool connected = true;
};

// Full post-processing. Cycle-first runs cycle breaking on the best-scored
// candidate per atom pair, valency correction on what survives, and a final
// cycle-breaking pass.
AssemblyResult assemble(const ScoredBondGraph &g, AssemblyOrder order);

}  // namespace molfrag

#endif  // MOLFRAG_ASSEMBLE_H_
