//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_RECORD_H_
#define MOLFRAG_RECORD_H_

#include <string>

#include "molfrag/assemble.h"
#include "molfrag/decompose.h"
#include "molfrag/molecule.h"
#include "molfrag/vocab.h"

namespace molfrag {

// One JSON line:
// {"id", "scheme", "motifs": [{"key", "smiles", "atoms"}], "singles",
//  "inter_bonds": [[u, v, order]]}
// "key" is the vocabulary entry's SMILES; "smiles" is the fragment itself,
// which can differ in formal charges under subcover.
std::string decomposition_record(const std::string &id, const Molecule &mol,
                                 const Decomposition &d,
                                 const Vocabulary &vocab);

// Parses one scored-graph line:
// {"id", "atoms": [{"element", "charge"}], "motifs": [[atom, ...]],
//  "motif_bonds": [[u, v, order]], "candidates": [[u, v, order, confidence]]}
// Throws Error(kInvalidInput) on malformed records.
ScoredBondGraph parse_scored_graph(const std::string &line, std::string &id);

std::string scored_graph_record(const std::string &id,
                                const ScoredBondGraph &g);

}  // namespace molfrag

#endif  // MOLFRAG_RECORD_H_
