//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/match.h"

#include <array>

namespace molfrag {
namespace {

class Matcher {
public:
  Matcher(const Molecule &pattern, const Molecule &target,
          bool charge_sensitive, const std::vector<bool> &allowed)
      : p_(pattern), t_(target), charge_sensitive_(charge_sensitive),
        map_(pattern.num_atoms(), -1), used_(target.num_atoms(), false),
        usable_(target.num_atoms(), true), tdeg_(target.num_atoms(), 0) {
    if (!allowed.empty())
      for (int v = 0; v < t_.num_atoms(); ++v)
        usable_[v] = allowed[v];
    for (int v = 0; v < t_.num_atoms(); ++v) {
      if (!usable_[v])
        continue;
      for (const Neighbor &nb: t_.neighbors(v))
        if (usable_[nb.atom])
          ++tdeg_[v];
    }
    // First earlier-indexed neighbor of each pattern atom, used to seed the
    // candidate list from the target neighborhood.
    anchor_.assign(p_.num_atoms(), -1);
    for (int i = 0; i < p_.num_atoms(); ++i)
      for (const Neighbor &nb: p_.neighbors(i))
        if (nb.atom < i && anchor_[i] < 0)
          anchor_[i] = nb.atom;
  }

  bool feasible() const {
    std::array<int, 128> need {};
    std::array<int, 128> have {};
    for (const Atom &a: p_.atoms())
      ++need[atomic_number(a.element)];
    for (int v = 0; v < t_.num_atoms(); ++v)
      if (usable_[v])
        ++have[atomic_number(t_.atom(v).element)];
    for (std::size_t z = 0; z < need.size(); ++z)
      if (need[z] > have[z])
        return false;
    return true;
  }

  bool search(int i) {
    if (i == p_.num_atoms())
      return true;
    if (anchor_[i] >= 0) {
      for (const Neighbor &nb: t_.neighbors(map_[anchor_[i]]))
        if (try_map(i, nb.atom))
          return true;
      return false;
    }
    for (int v = 0; v < t_.num_atoms(); ++v)
      if (try_map(i, v))
        return true;
    return false;
  }

  std::vector<int> mapping() const { return map_; }

private:
  bool compatible(int i, int v) const {
    if (used_[v] || !usable_[v])
      return false;
    const Atom &a = p_.atom(i);
    const Atom &b = t_.atom(v);
    if (a.element != b.element)
      return false;
    if (charge_sensitive_ && a.formal_charge != b.formal_charge)
      return false;
    if (tdeg_[v] < p_.degree(i))
      return false;
    for (int j = 0; j < i; ++j) {
      const int pb = p_.find_bond(i, j);
      const int tb = t_.find_bond(v, map_[j]);
      if ((pb < 0) != (tb < 0))
        return false;
      if (pb >= 0 && p_.bond(pb).order != t_.bond(tb).order)
        return false;
    }
    return true;
  }

  bool try_map(int i, int v) {
    if (!compatible(i, v))
      return false;
    map_[i] = v;
    used_[v] = true;
    if (search(i + 1))
      return true;
    used_[v] = false;
    map_[i] = -1;
    return false;
  }

  const Molecule &p_;
  const Molecule &t_;
  bool charge_sensitive_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<bool> usable_;
  std::vector<int> tdeg_;
  std::vector<int> anchor_;
};

}  // namespace

std::optional<std::vector<int>>
match_subgraph(const Molecule &pattern, const Molecule &target,
               bool charge_sensitive, const std::vector<bool> &allowed) {
  if (pattern.num_atoms() == 0 || pattern.num_atoms() > target.num_atoms())
    return std::nullopt;
  Matcher m(pattern, target, charge_sensitive, allowed);
  if (!m.feasible())
    return std::nullopt;
  if (!m.search(0))
    return std::nullopt;
  return m.mapping();
}

}  // namespace molfrag
