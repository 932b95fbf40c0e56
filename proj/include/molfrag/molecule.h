//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_MOLECULE_H_
#define MOLFRAG_MOLECULE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "molfrag/element.h"

namespace molfrag {

enum class BondOrder : std::uint8_t {
  kSingle = 1,
  kDouble = 2,
  kTriple = 3,
};

constexpr int order_value(BondOrder o) {
  return static_cast<int>(o);
}

struct Atom {
  Element element = Element::kC;
  int formal_charge = 0;

  friend bool operator==(const Atom &, const Atom &) = default;
};

// Endpoints are stored with begin < end.
struct Bond {
  int begin = 0;
  int end = 0;
  BondOrder order = BondOrder::kSingle;

  int other(int atom) const { return atom == begin ? end : begin; }

  friend bool operator==(const Bond &, const Bond &) = default;
};

struct Neighbor {
  int atom;
  int bond;
};

// Heavy-atom molecular graph. Hydrogens are implicit and not stored.
//
// The constructor validates the structural invariants (endpoint ranges, no
// self loops, no parallel bonds, supported charge range) and builds a sorted
// adjacency list; the object is immutable afterwards. Connectivity and
// valence are checked separately so that intermediate graphs produced during
// assembly can still be represented.
class Molecule {
public:
  Molecule() = default;
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds);

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }
  bool empty() const { return atoms_.empty(); }

  const Atom &atom(int i) const { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Bond> bonds() const { return bonds_; }

  // Neighbors sorted by atom index.
  std::span<const Neighbor> neighbors(int atom) const {
    return { adjacency_.data() + offsets_[atom],
             adjacency_.data() + offsets_[atom + 1] };
  }
  int degree(int atom) const { return offsets_[atom + 1] - offsets_[atom]; }

  // Bond index joining u and v, or -1.
  int find_bond(int u, int v) const;
  int bond_order_sum(int atom) const;
  bool is_connected() const;

  friend bool operator==(const Molecule &lhs, const Molecule &rhs) {
    return lhs.atoms_ == rhs.atoms_ && lhs.bonds_ == rhs.bonds_;
  }

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<int> offsets_ { 0 };
  std::vector<Neighbor> adjacency_;
};

// Throws Error(kValence) if some atom's bond-order sum exceeds its maximum
// valence for the atom's charge state.
void check_valence(const Molecule &mol);

// Connected components as sorted atom lists, ordered by smallest atom.
std::vector<std::vector<int>> connected_components(const Molecule &mol);

// Same, traversing only bonds whose entry in `bond_mask` is true.
std::vector<std::vector<int>>
connected_components(const Molecule &mol, const std::vector<bool> &bond_mask);

// Components of the subgraph induced by `atoms` (which need not be sorted).
std::vector<std::vector<int>>
connected_components(const Molecule &mol, std::span<const int> atoms);

// Induced subgraph on `atoms`; atom i of the result is atoms[i] of `mol`.
Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms);

}  // namespace molfrag

#endif  // MOLFRAG_MOLECULE_H_
