//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_SMILES_H_
#define MOLFRAG_SMILES_H_

#include <string>
#include <string_view>

#include "molfrag/molecule.h"

namespace molfrag {

// Parses a single-component SMILES string into a kekulized heavy-atom graph.
//
// Supported: the organic subset, bracket atoms (element, charge, H count,
// atom class), branches, ring-bond digits including %nn, the bond symbols
// - = # : / \, and lowercase aromatic b c n o p s (plus [se]). Stereo marks
// are accepted and dropped. Aromatic systems are converted to alternating
// single/double bonds. Explicit [H] atoms are folded into their neighbor.
// Atom indices follow token order.
//
// Throws Error with a character position for syntax problems, and with
// codes kUnsupportedElement, kUnsupportedFeature (isotopes, '$', '*'),
// kMultiComponent ('.'), kUnclosedRing, kKekulization or kValence.
Molecule parse_smiles(std::string_view text);

// Canonical SMILES. Atoms are written in canonical order and in kekulized
// form, so isomorphic molecules give identical strings. Disconnected inputs
// are written as '.'-joined, sorted component strings.
std::string write_smiles(const Molecule &mol);

}  // namespace molfrag

#endif  // MOLFRAG_SMILES_H_
