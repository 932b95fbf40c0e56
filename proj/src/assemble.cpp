//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/assemble.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "molfrag/error.h"
#include "molfrag/rings.h"

namespace molfrag {
namespace {

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::pair { u, v } : std::pair { v, u };
}

std::vector<int> motif_owner(const ScoredBondGraph &g) {
  std::vector<int> owner(g.atoms.size(), -1);
  for (std::size_t m = 0; m < g.motifs.size(); ++m) {
    for (int v: g.motifs[m]) {
      if (v < 0 || v >= static_cast<int>(g.atoms.size()))
        throw Error(ErrorCode::kInvalidInput, "motif atom out of range");
      if (owner[v] >= 0)
        throw Error(ErrorCode::kInvalidInput,
                    "atom " + std::to_string(v) + " is in two motifs");
      owner[v] = static_cast<int>(m);
    }
  }
  return owner;
}

std::vector<int> fixed_valence_use(const ScoredBondGraph &g) {
  std::vector<int> used(g.atoms.size(), 0);
  for (const Bond &b: g.motif_bonds) {
    used[b.begin] += order_value(b.order);
    used[b.end] += order_value(b.order);
  }
  return used;
}

std::vector<int> correct(const ScoredBondGraph &g,
                         const std::set<std::pair<int, int>> *allowed_pairs) {
  std::vector<int> used = fixed_valence_use(g);
  std::set<std::pair<int, int>> bonded;
  for (const Bond &b: g.motif_bonds)
    bonded.insert(ordered(b.begin, b.end));

  std::vector<int> order(g.candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const BondCandidate &a = g.candidates[x];
    const BondCandidate &b = g.candidates[y];
    if (a.confidence != b.confidence)
      return a.confidence > b.confidence;
    const auto pa = ordered(a.u, a.v);
    const auto pb = ordered(b.u, b.v);
    return std::tuple(pa.first, pa.second, order_value(a.order))
           < std::tuple(pb.first, pb.second, order_value(b.order));
  });

  std::vector<int> accepted;
  for (int i: order) {
    const BondCandidate &c = g.candidates[i];
    const auto pair = ordered(c.u, c.v);
    if (allowed_pairs != nullptr && !allowed_pairs->count(pair))
      continue;
    if (bonded.count(pair))
      continue;
    const int o = order_value(c.order);
    const Atom &a = g.atoms[c.u];
    const Atom &b = g.atoms[c.v];
    if (used[c.u] + o > max_valence(a.element, a.formal_charge)
        || used[c.v] + o > max_valence(b.element, b.formal_charge))
      continue;
    used[c.u] += o;
    used[c.v] += o;
    bonded.insert(pair);
    accepted.push_back(i);
  }
  return accepted;
}

// Motif bonds followed by the given candidates.
std::pair<Molecule, std::vector<bool>>
build(const ScoredBondGraph &g, const std::vector<int> &candidates,
      std::vector<double> *confidence) {
  std::vector<Bond> bonds = g.motif_bonds;
  std::vector<bool> intra(bonds.size(), true);
  if (confidence != nullptr)
    confidence->assign(bonds.size(), 1.0);
  for (int i: candidates) {
    const BondCandidate &c = g.candidates[i];
    bonds.push_back({ c.u, c.v, c.order });
    intra.push_back(false);
    if (confidence != nullptr)
      confidence->push_back(c.confidence);
  }
  return { Molecule(g.atoms, std::move(bonds)), std::move(intra) };
}

}  // namespace

void validate(const ScoredBondGraph &g) {
  const int n = static_cast<int>(g.atoms.size());
  for (const Atom &a: g.atoms)
    if (allowed_valences(a.element, a.formal_charge).empty())
      throw Error(ErrorCode::kInvalidInput, "unsupported atom charge state");
  const std::vector<int> owner = motif_owner(g);
  for (const Bond &b: g.motif_bonds) {
    if (b.begin < 0 || b.end < 0 || b.begin >= n || b.end >= n
        || b.begin == b.end)
      throw Error(ErrorCode::kInvalidInput, "bad motif bond endpoints");
    if (owner[b.begin] < 0 || owner[b.begin] != owner[b.end])
      throw Error(ErrorCode::kInvalidInput, "motif bond leaves its motif");
  }
  const std::vector<int> used = fixed_valence_use(g);
  for (int v = 0; v < n; ++v)
    if (used[v] > max_valence(g.atoms[v].element, g.atoms[v].formal_charge))
      throw Error(ErrorCode::kInvalidInput,
                  "motif bonds exceed the valence of atom "
                      + std::to_string(v));
  std::set<std::tuple<int, int, int>> seen;
  for (const BondCandidate &c: g.candidates) {
    if (c.u < 0 || c.v < 0 || c.u >= n || c.v >= n || c.u == c.v)
      throw Error(ErrorCode::kInvalidInput, "bad candidate endpoints");
    if (owner[c.u] >= 0 && owner[c.u] == owner[c.v])
      throw Error(ErrorCode::kInvalidInput,
                  "candidate joins two atoms of the same motif");
    if (!std::isfinite(c.confidence) || c.confidence < 0.0
        || c.confidence > 1.0)
      throw Error(ErrorCode::kInvalidInput, "confidence outside [0, 1]");
    const auto p = ordered(c.u, c.v);
    if (!seen.emplace(p.first, p.second, order_value(c.order)).second)
      throw Error(ErrorCode::kInvalidInput, "duplicate candidate");
  }
}

std::vector<int> valency_correct(const ScoredBondGraph &g) {
  validate(g);
  return correct(g, nullptr);
}

CycleBreakResult cycle_break(const Molecule &mol, const std::vector<bool> &intra,
                             const std::vector<double> &confidence) {
  std::vector<int> alive(mol.num_bonds());
  std::iota(alive.begin(), alive.end(), 0);
  CycleBreakResult result;

  for (;;) {
    std::vector<Bond> bonds;
    bonds.reserve(alive.size());
    for (int b: alive)
      bonds.push_back(mol.bond(b));
    const Molecule current(std::vector<Atom>(mol.atoms().begin(),
                                             mol.atoms().end()),
                           std::move(bonds));
    const RingInfo rings = perceive_rings(current);

    std::vector<std::vector<int>> ring_bonds;  // local bond indices
    std::vector<bool> extra;
    for (const auto &ring: rings.rings) {
      std::vector<int> rb;
      bool has_inter = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const int b = current.find_bond(ring[i], ring[(i + 1) % ring.size()]);
        rb.push_back(b);
        has_inter = has_inter || !intra[alive[b]];
      }
      ring_bonds.push_back(std::move(rb));
      extra.push_back(has_inter);
    }

    std::vector<bool> violating(rings.rings.size(), false);
    for (std::size_t r = 0; r < rings.rings.size(); ++r) {
      if (!extra[r])
        continue;
      const std::size_t size = rings.rings[r].size();
      if (size != 5 && size != 6)
        violating[r] = true;
      for (std::size_t s = r + 1; s < rings.rings.size(); ++s) {
        if (!extra[s])
          continue;
        std::vector<int> x = rings.rings[r];
        std::vector<int> y = rings.rings[s];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        std::vector<int> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                              std::back_inserter(common));
        if (common.size() > 2)
          violating[r] = violating[s] = true;
      }
    }

    int victim = -1;
    for (std::size_t r = 0; r < rings.rings.size(); ++r) {
      if (!violating[r])
        continue;
      for (int local: ring_bonds[r]) {
        const int b = alive[local];
        if (intra[b])
          continue;
        if (victim < 0 || confidence[b] < confidence[victim]
            || (confidence[b] == confidence[victim]
                && std::pair(mol.bond(b).begin, mol.bond(b).end)
                       < std::pair(mol.bond(victim).begin,
                                   mol.bond(victim).end)))
          victim = b;
      }
    }
    if (victim < 0) {
      result.intra.clear();
      for (int b: alive)
        result.intra.push_back(intra[b]);
      result.mol = current;
      return result;
    }
    result.removed.push_back(victim);
    alive.erase(std::find(alive.begin(), alive.end(), victim));
  }
}

CycleBreakResult cycle_break(const Molecule &mol, const Decomposition &d,
                             const std::vector<double> &confidence) {
  std::vector<bool> intra(mol.num_bonds(), false);
  for (int b: d.intra_bonds)
    intra[b] = true;
  return cycle_break(mol, intra, confidence);
}

std::string_view order_name(AssemblyOrder o) {
  return o == AssemblyOrder::kValencyFirst ? "valency-first" : "cycle-first";
}

AssemblyResult assemble(const ScoredBondGraph &g, AssemblyOrder order) {
  validate(g);
  std::vector<int> chosen;
  if (order == AssemblyOrder::kValencyFirst) {
    chosen = correct(g, nullptr);
  } else {
    // Best candidate per pair: highest confidence, then lowest order.
    std::vector<int> best_of_pair;
    std::vector<int> idx(g.candidates.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) {
      const auto px = ordered(g.candidates[x].u, g.candidates[x].v);
      const auto py = ordered(g.candidates[y].u, g.candidates[y].v);
      if (px != py)
        return px < py;
      if (g.candidates[x].confidence != g.candidates[y].confidence)
        return g.candidates[x].confidence > g.candidates[y].confidence;
      return g.candidates[x].order < g.candidates[y].order;
    });
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const auto p = ordered(g.candidates[idx[i]].u, g.candidates[idx[i]].v);
      if (i == 0
          || p != ordered(g.candidates[idx[i - 1]].u,
                          g.candidates[idx[i - 1]].v))
        best_of_pair.push_back(idx[i]);
    }
    std::vector<double> conf;
    auto [mol, intra] = build(g, best_of_pair, &conf);
    const CycleBreakResult pruned = cycle_break(mol, intra, conf);
    std::set<std::pair<int, int>> surviving;
    for (int i = 0; i < pruned.mol.num_bonds(); ++i)
      surviving.insert(
          ordered(pruned.mol.bond(i).begin, pruned.mol.bond(i).end));
    chosen = correct(g, &surviving);
  }
  std::vector<double> conf;
  auto [mol, intra] = build(g, chosen, &conf);
  CycleBreakResult pruned = cycle_break(mol, intra, conf);
  AssemblyResult result;
  result.connected = pruned.mol.is_connected();
  result.mol = std::move(pruned.mol);
  result.intra = std::move(pruned.intra);
  return result;
}

}  // namespace molfrag
