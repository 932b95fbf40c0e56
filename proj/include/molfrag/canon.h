//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_CANON_H_
#define MOLFRAG_CANON_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "molfrag/molecule.h"

namespace molfrag {

// Exact identifier of a labeled-graph isomorphism class. Node labels are
// (element, formal charge) in the charge-sensitive variant and element only
// otherwise; edge labels are bond orders. Keys compare bytewise.
struct MotifKey {
  std::string bytes;
  bool charge_sensitive = true;

  bool empty() const { return bytes.empty(); }

  friend bool operator==(const MotifKey &, const MotifKey &) = default;
  friend std::strong_ordering operator<=>(const MotifKey &lhs,
                                          const MotifKey &rhs) {
    if (auto c = lhs.bytes <=> rhs.bytes; c != 0)
      return c;
    return lhs.charge_sensitive <=> rhs.charge_sensitive;
  }
};

// Canonical rank of every atom: rank[v] is v's position in the canonical
// order. Computed by iterated neighborhood refinement followed by
// individualization over the smallest ambiguous cell, keeping the
// lexicographically smallest adjacency encoding. Automorphisms discovered
// during the search prune equivalent branches.
std::vector<int> canonical_ranks(const Molecule &mol, bool charge_sensitive);

// Same, with `bond_labels[b]` in [0, 3] standing in for the order of bond b.
std::vector<int> canonical_ranks(const Molecule &mol,
                                 std::span<const int> bond_labels,
                                 bool charge_sensitive);

// Throws Error(kDisconnected) for a disconnected graph.
MotifKey canonical_key(const Molecule &mol, bool charge_sensitive);

// Key of the subgraph of `mol` induced by `atoms`.
MotifKey canonical_key(const Molecule &mol, std::span<const int> atoms,
                       bool charge_sensitive);

// Lowercase hex rendering, used in reports.
// Rebuilds the fragment a key was computed from, with atoms in canonical
// order. Charges are zero when the key is charge-insensitive.
Molecule key_to_molecule(const MotifKey &key);

std::string to_hex(const MotifKey &key);

}  // namespace molfrag

#endif  // MOLFRAG_CANON_H_
