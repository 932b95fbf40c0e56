//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/rings.h"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

namespace molfrag {

std::vector<bool> ring_bonds(const Molecule &mol) {
  const int n = mol.num_atoms();
  std::vector<bool> in_ring(mol.num_bonds(), true);
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);

  struct Frame {
    int atom;
    int parent_bond;
    int next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0)
      continue;
    disc[root] = low[root] = timer++;
    stack.push_back({ root, -1, 0 });
    while (!stack.empty()) {
      Frame &f = stack.back();
      auto nbrs = mol.neighbors(f.atom);
      if (f.next < static_cast<int>(nbrs.size())) {
        const Neighbor nb = nbrs[f.next++];
        if (nb.bond == f.parent_bond)
          continue;
        if (disc[nb.atom] < 0) {
          disc[nb.atom] = low[nb.atom] = timer++;
          stack.push_back({ nb.atom, nb.bond, 0 });
        } else {
          low[f.atom] = std::min(low[f.atom], disc[nb.atom]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        Frame &parent = stack.back();
        low[parent.atom] = std::min(low[parent.atom], low[done.atom]);
        if (low[done.atom] > disc[parent.atom])
          in_ring[done.parent_bond] = false;
      }
    }
  }
  return in_ring;
}

namespace {
using Bits = std::vector<std::uint64_t>;

struct Candidate {
  int length;
  std::vector<int> bonds;  // sorted
  Bits bits;
};

void set_bit(Bits &bits, int i) {
  bits[i >> 6] |= std::uint64_t { 1 } << (i & 63);
}

int lowest_bit(const Bits &bits) {
  for (std::size_t w = 0; w < bits.size(); ++w)
    if (bits[w] != 0)
      return static_cast<int>(w * 64 + __builtin_ctzll(bits[w]));
  return -1;
}

bool test_bit(const Bits &bits, int i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}

std::vector<int> cycle_atoms(const Molecule &mol, const std::vector<int> &bonds) {
  std::vector<std::vector<int>> adj;
  std::vector<int> atoms;
  for (int b: bonds) {
    atoms.push_back(mol.bond(b).begin);
    atoms.push_back(mol.bond(b).end);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  auto local = [&](int a) {
    return static_cast<int>(std::lower_bound(atoms.begin(), atoms.end(), a)
                            - atoms.begin());
  };
  adj.resize(atoms.size());
  for (int b: bonds) {
    const int x = local(mol.bond(b).begin);
    const int y = local(mol.bond(b).end);
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto &a: adj)
    std::sort(a.begin(), a.end());

  std::vector<int> cycle { atoms[0] };
  int prev = 0;
  int cur = adj[0][0];
  while (cur != 0) {
    cycle.push_back(atoms[cur]);
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  return cycle;
}
}  // namespace

RingInfo perceive_rings(const Molecule &mol) {
  const int n = mol.num_atoms();
  const int m = mol.num_bonds();
  RingInfo info;
  info.bond_in_ring = ring_bonds(mol);
  info.atom_in_ring.assign(n, false);
  for (int b = 0; b < m; ++b) {
    if (info.bond_in_ring[b]) {
      info.atom_in_ring[mol.bond(b).begin] = true;
      info.atom_in_ring[mol.bond(b).end] = true;
    }
  }

  const int basis_size =
      m - n + static_cast<int>(connected_components(mol).size());
  if (basis_size <= 0)
    return info;

  // Horton candidates: for every ring atom r and ring bond (x, y), the cycle
  // formed by the shortest paths r..x and r..y plus the bond, when the two
  // paths meet only at r.
  const int words = (m + 63) / 64;
  std::vector<Candidate> candidates;
  std::vector<int> dist(n);
  std::vector<int> parent_bond(n);
  std::vector<int> parent_atom(n);
  std::vector<int> mark(n, -1);
  for (int r = 0; r < n; ++r) {
    if (!info.atom_in_ring[r])
      continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent_bond[r] = -1;
    parent_atom[r] = -1;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const Neighbor &nb: mol.neighbors(v)) {
        if (!info.bond_in_ring[nb.bond] || dist[nb.atom] >= 0)
          continue;
        dist[nb.atom] = dist[v] + 1;
        parent_bond[nb.atom] = nb.bond;
        parent_atom[nb.atom] = v;
        q.push(nb.atom);
      }
    }

    for (int b = 0; b < m; ++b) {
      if (!info.bond_in_ring[b])
        continue;
      const int x = mol.bond(b).begin;
      const int y = mol.bond(b).end;
      if (dist[x] < 0 || dist[y] < 0)
        continue;
      if (parent_bond[x] == b || parent_bond[y] == b)
        continue;

      Candidate c;
      c.bits.assign(words, 0);
      bool simple = true;
      const int stamp = r * m + b;
      for (int v = x; v != r; v = parent_atom[v]) {
        mark[v] = stamp;
        c.bonds.push_back(parent_bond[v]);
      }
      for (int v = y; v != r; v = parent_atom[v]) {
        if (mark[v] == stamp) {
          simple = false;
          break;
        }
        c.bonds.push_back(parent_bond[v]);
      }
      if (!simple)
        continue;
      c.bonds.push_back(b);
      std::sort(c.bonds.begin(), c.bonds.end());
      c.length = static_cast<int>(c.bonds.size());
      for (int e: c.bonds)
        set_bit(c.bits, e);
      candidates.push_back(std::move(c));
    }
    std::fill(mark.begin(), mark.end(), -1);
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &a, const Candidate &b) {
              if (a.length != b.length)
                return a.length < b.length;
              return a.bonds < b.bonds;
            });

  // Greedy selection of GF(2)-independent cycles.
  std::vector<Bits> reduced;
  std::vector<int> pivots;
  const std::vector<int> *last = nullptr;
  for (const Candidate &c: candidates) {
    if (static_cast<int>(info.rings.size()) == basis_size)
      break;
    if (last != nullptr && *last == c.bonds)
      continue;
    last = &c.bonds;

    Bits v = c.bits;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (test_bit(v, pivots[i]))
        for (int w = 0; w < words; ++w)
          v[w] ^= reduced[i][w];
    }
    const int pivot = lowest_bit(v);
    if (pivot < 0)
      continue;
    // Keep rows fully reduced on their pivots.
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (test_bit(reduced[i], pivot))
        for (int w = 0; w < words; ++w)
          reduced[i][w] ^= v[w];
    }
    reduced.push_back(std::move(v));
    pivots.push_back(pivot);
    info.rings.push_back(cycle_atoms(mol, c.bonds));
  }
  return info;
}

}  // namespace molfrag
