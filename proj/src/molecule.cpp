//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/molecule.h"

#include <algorithm>
#include <string>
#include <utility>

#include "molfrag/error.h"

namespace molfrag {

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds)
    : atoms_(std::move(atoms)), bonds_(std::move(bonds)) {
  const int n = num_atoms();
  for (const Atom &a: atoms_) {
    if (allowed_valences(a.element, a.formal_charge).empty())
      throw Error(ErrorCode::kInvalidGraph,
                  "unsupported charge state " + std::to_string(a.formal_charge)
                      + " for " + std::string(element_symbol(a.element)));
  }

  std::vector<int> degree(n, 0);
  for (Bond &b: bonds_) {
    if (b.begin > b.end)
      std::swap(b.begin, b.end);
    if (b.begin < 0 || b.end >= n)
      throw Error(ErrorCode::kInvalidGraph, "bond endpoint out of range");
    if (b.begin == b.end)
      throw Error(ErrorCode::kInvalidGraph, "bond joins an atom to itself");
    ++degree[b.begin];
    ++degree[b.end];
  }

  offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i)
    offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int i = 0; i < num_bonds(); ++i) {
    const Bond &b = bonds_[i];
    adjacency_[fill[b.begin]++] = { b.end, i };
    adjacency_[fill[b.end]++] = { b.begin, i };
  }
  for (int i = 0; i < n; ++i) {
    auto first = adjacency_.begin() + offsets_[i];
    auto last = adjacency_.begin() + offsets_[i + 1];
    std::sort(first, last, [](const Neighbor &x, const Neighbor &y) {
      return x.atom < y.atom;
    });
    if (std::adjacent_find(first, last,
                           [](const Neighbor &x, const Neighbor &y) {
                             return x.atom == y.atom;
                           })
        != last)
      throw Error(ErrorCode::kInvalidGraph,
                  "more than one bond between the same atom pair");
  }
}

int Molecule::find_bond(int u, int v) const {
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(
      nbrs.begin(), nbrs.end(), v,
      [](const Neighbor &nb, int atom) { return nb.atom < atom; });
  if (it != nbrs.end() && it->atom == v)
    return it->bond;
  return -1;
}

int Molecule::bond_order_sum(int atom) const {
  int sum = 0;
  for (const Neighbor &nb: neighbors(atom))
    sum += order_value(bonds_[nb.bond].order);
  return sum;
}

bool Molecule::is_connected() const {
  if (atoms_.empty())
    return true;
  return connected_components(*this).size() == 1;
}

void check_valence(const Molecule &mol) {
  for (int i = 0; i < mol.num_atoms(); ++i) {
    const Atom &a = mol.atom(i);
    const int sum = mol.bond_order_sum(i);
    if (sum > max_valence(a.element, a.formal_charge))
      throw Error(ErrorCode::kValence,
                  "atom " + std::to_string(i) + " ("
                      + std::string(element_symbol(a.element))
                      + ") exceeds its maximum valence");
  }
}

namespace {
template <class Traversable>
std::vector<std::vector<int>> components_impl(const Molecule &mol,
                                              Traversable traversable) {
  const int n = mol.num_atoms();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> result;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    const int id = static_cast<int>(result.size());
    auto &members = result.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const Neighbor &nb: mol.neighbors(v)) {
        if (!traversable(nb.bond))
          continue;
        if (comp[nb.atom] < 0) {
          comp[nb.atom] = id;
          stack.push_back(nb.atom);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return result;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const Molecule &mol) {
  return components_impl(mol, [](int) { return true; });
}

std::vector<std::vector<int>>
connected_components(const Molecule &mol, const std::vector<bool> &bond_mask) {
  return components_impl(mol, [&](int bond) { return bond_mask[bond]; });
}

std::vector<std::vector<int>>
connected_components(const Molecule &mol, std::span<const int> atoms) {
  std::vector<char> inside(mol.num_atoms(), 0);
  for (int a: atoms)
    inside[a] = 1;

  std::vector<int> sorted(atoms.begin(), atoms.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<std::vector<int>> result;
  std::vector<int> stack;
  for (int s: sorted) {
    if (inside[s] != 1)
      continue;
    auto &members = result.emplace_back();
    inside[s] = 2;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const Neighbor &nb: mol.neighbors(v)) {
        if (inside[nb.atom] == 1) {
          inside[nb.atom] = 2;
          stack.push_back(nb.atom);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return result;
}

Molecule induced_subgraph(const Molecule &mol, std::span<const int> atoms) {
  std::vector<int> local(mol.num_atoms(), -1);
  std::vector<Atom> sub_atoms;
  sub_atoms.reserve(atoms.size());
  for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
    local[atoms[i]] = i;
    sub_atoms.push_back(mol.atom(atoms[i]));
  }

  std::vector<Bond> sub_bonds;
  for (int i = 0; i < static_cast<int>(atoms.size()); ++i) {
    for (const Neighbor &nb: mol.neighbors(atoms[i])) {
      const int j = local[nb.atom];
      if (j > i)
        sub_bonds.push_back({ i, j, mol.bond(nb.bond).order });
    }
  }
  return Molecule(std::move(sub_atoms), std::move(sub_bonds));
}

}  // namespace molfrag
