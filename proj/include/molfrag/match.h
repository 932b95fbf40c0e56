//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_MATCH_H_
#define MOLFRAG_MATCH_H_

#include <optional>
#include <vector>

#include "molfrag/molecule.h"

namespace molfrag {

// Finds an induced embedding of `pattern` in `target`: element and bond order
// must agree on mapped atoms and bonds, and unbonded pattern pairs must map to
// unbonded target pairs. Formal charge is compared only if `charge_sensitive`.
//
// If `allowed` is non-empty, only target atoms with allowed[v] set may be
// used. Returns the lexicographically smallest mapping (pattern atom i maps
// to result[i]), or nullopt.
std::optional<std::vector<int>>
match_subgraph(const Molecule &pattern, const Molecule &target,
               bool charge_sensitive, const std::vector<bool> &allowed = {});

}  // namespace molfrag

#endif  // MOLFRAG_MATCH_H_
