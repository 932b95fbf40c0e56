//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_RINGS_H_
#define MOLFRAG_RINGS_H_

#include <vector>

#include "molfrag/molecule.h"

namespace molfrag {

struct RingInfo {
  std::vector<bool> atom_in_ring;
  std::vector<bool> bond_in_ring;
  // Smallest-ring basis. Each ring lists its atoms in cycle order, starting
  // at its smallest atom index and continuing toward the smaller neighbor.
  std::vector<std::vector<int>> rings;
};

// Bonds that lie on some cycle (the complement of the bridges).
std::vector<bool> ring_bonds(const Molecule &mol);

// Bridge classification plus a minimum cycle basis of size
// |bonds| - |atoms| + |components|. The basis is chosen from Horton's
// candidate set by length, with ties broken on the sorted bond indices.
RingInfo perceive_rings(const Molecule &mol);

}  // namespace molfrag

#endif  // MOLFRAG_RINGS_H_
