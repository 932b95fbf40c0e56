//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/decompose.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>
#include <utility>

#include "molfrag/canon.h"
#include "molfrag/error.h"
#include "molfrag/match.h"
#include "molfrag/rings.h"

namespace molfrag {

std::string_view scheme_name(Scheme s) {
  switch (s) {
  case Scheme::kBbb:
    return "bbb";
  case Scheme::kPsm:
    return "psm";
  case Scheme::kSubcover:
    return "subcover";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
  if (name == "bbb")
    return Scheme::kBbb;
  if (name == "psm")
    return Scheme::kPsm;
  if (name == "subcover")
    return Scheme::kSubcover;
  return std::nullopt;
}

std::vector<std::vector<int>> bbb_fragment(const Molecule &mol) {
  const std::vector<bool> in_ring = ring_bonds(mol);
  std::vector<bool> ring_atom(mol.num_atoms(), false);
  for (int b = 0; b < mol.num_bonds(); ++b) {
    if (in_ring[b]) {
      ring_atom[mol.bond(b).begin] = true;
      ring_atom[mol.bond(b).end] = true;
    }
  }
  std::vector<bool> keep(mol.num_bonds(), true);
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const Bond &bond = mol.bond(b);
    if (!in_ring[b] && (ring_atom[bond.begin] || ring_atom[bond.end]))
      keep[b] = false;
  }
  return connected_components(mol, keep);
}

void finalize_decomposition(const Molecule &mol, Decomposition &d) {
  std::vector<int> owner(mol.num_atoms(), -1);
  for (std::size_t m = 0; m < d.motifs.size(); ++m) {
    auto &atoms = d.motifs[m].atoms;
    std::sort(atoms.begin(), atoms.end());
  }
  std::sort(d.motifs.begin(), d.motifs.end(),
            [](const MotifOccurrence &x, const MotifOccurrence &y) {
              return x.atoms.front() < y.atoms.front();
            });
  std::sort(d.singles.begin(), d.singles.end());
  for (std::size_t m = 0; m < d.motifs.size(); ++m)
    for (int v: d.motifs[m].atoms)
      owner[v] = static_cast<int>(m);

  d.intra_bonds.clear();
  d.inter_bonds.clear();
  for (int b = 0; b < mol.num_bonds(); ++b) {
    const int x = owner[mol.bond(b).begin];
    if (x >= 0 && x == owner[mol.bond(b).end])
      d.intra_bonds.push_back(b);
    else
      d.inter_bonds.push_back(b);
  }
}

Decomposition bbb_decompose(const Molecule &mol, const Vocabulary &vocab) {
  Decomposition d;
  d.scheme = Scheme::kBbb;
  for (auto &frag: bbb_fragment(mol)) {
    const int entry =
        frag.size() < 2 ? -1 : vocab.find(canonical_key(mol, frag, true));
    if (entry >= 0)
      d.motifs.push_back({ std::move(frag), entry });
    else
      d.singles.insert(d.singles.end(), frag.begin(), frag.end());
  }
  finalize_decomposition(mol, d);
  return d;
}

Decomposition psm_decompose(const Molecule &mol, const Vocabulary &vocab) {
  if (vocab.scheme() != VocabScheme::kPsm)
    throw Error(ErrorCode::kSchemeMismatch,
                "psm decomposition needs a psm vocabulary, got "
                    + std::string(scheme_name(vocab.scheme())));
  PsmState state = psm_initial_state(mol);
  std::map<std::pair<int, int>, int> cache;
  for (;;) {
    int best = -1;
    std::pair<int, int> best_pair;
    for (const auto &pair: psm_adjacent_pairs(mol, state)) {
      auto it = cache.find(pair);
      if (it == cache.end()) {
        const auto atoms = psm_merged_atoms(state, pair.first, pair.second);
        it = cache.emplace(pair, vocab.find(canonical_key(mol, atoms, true)))
                 .first;
      }
      const int e = it->second;
      if (e < 0)
        continue;
      // Pairs arrive in (a, b) order, so the first of equal keys wins.
      if (best < 0 || vocab.entry(e).count > vocab.entry(best).count
          || (vocab.entry(e).count == vocab.entry(best).count
              && vocab.entry(e).key < vocab.entry(best).key)) {
        best = e;
        best_pair = pair;
      }
    }
    if (best < 0)
      break;
    const auto [a, b] = best_pair;
    for (int &f: state.frag)
      if (f == b)
        f = a;
    for (auto it = cache.begin(); it != cache.end();) {
      const auto [x, y] = it->first;
      if (x == a || x == b || y == a || y == b)
        it = cache.erase(it);
      else
        ++it;
    }
  }

  Decomposition d;
  d.scheme = Scheme::kPsm;
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < mol.num_atoms(); ++v)
    groups[state.frag[v]].push_back(v);
  for (auto &[rep, atoms]: groups) {
    if (atoms.size() == 1) {
      d.singles.push_back(atoms[0]);
      continue;
    }
    const int entry = vocab.find(canonical_key(mol, atoms, true));
    d.motifs.push_back({ std::move(atoms), entry });
  }
  finalize_decomposition(mol, d);
  return d;
}

namespace {
void extract_motifs(const Molecule &mol, const std::vector<int> &frag,
                    const Vocabulary &vocab, MotifSearchResult &out) {
  if (frag.size() >= 2) {
    std::vector<bool> allowed(mol.num_atoms(), false);
    for (int v: frag)
      allowed[v] = true;
    for (int e: vocab.search_order()) {
      if (vocab.entry(e).atom_count > static_cast<int>(frag.size()))
        continue;
      auto mapping = match_subgraph(vocab.pattern(e), mol, false, allowed);
      if (!mapping)
        continue;
      std::vector<int> atoms = *mapping;
      std::sort(atoms.begin(), atoms.end());
      std::vector<int> rest;
      std::set_difference(frag.begin(), frag.end(), atoms.begin(), atoms.end(),
                          std::back_inserter(rest));
      out.motifs.push_back({ std::move(atoms), e });
      for (const auto &component: connected_components(mol, rest))
        extract_motifs(mol, component, vocab, out);
      return;
    }
  }
  out.leftovers.insert(out.leftovers.end(), frag.begin(), frag.end());
}
}  // namespace

MotifSearchResult find_m_in_f(const Molecule &mol, const std::vector<int> &frag,
                              const Vocabulary &vocab) {
  std::vector<int> sorted = frag;
  std::sort(sorted.begin(), sorted.end());
  MotifSearchResult result;
  extract_motifs(mol, sorted, vocab, result);
  return result;
}

Decomposition subcover_decompose(const Molecule &mol, const Vocabulary &vocab) {
  if (vocab.scheme() != VocabScheme::kBbb)
    throw Error(ErrorCode::kSchemeMismatch,
                "subcover decomposition needs a bbb vocabulary, got "
                    + std::string(scheme_name(vocab.scheme())));
  Decomposition d;
  d.scheme = Scheme::kSubcover;
  for (auto &frag: bbb_fragment(mol)) {
    if (frag.size() < 2) {
      d.singles.push_back(frag[0]);
      continue;
    }
    const int entry = vocab.find(canonical_key(mol, frag, true));
    if (entry >= 0) {
      d.motifs.push_back({ std::move(frag), entry });
      continue;
    }
    MotifSearchResult found = find_m_in_f(mol, frag, vocab);
    for (auto &m: found.motifs)
      d.motifs.push_back(std::move(m));
    d.singles.insert(d.singles.end(), found.leftovers.begin(),
                     found.leftovers.end());
  }
  finalize_decomposition(mol, d);
  return d;
}

Decomposition decompose(const Molecule &mol, const Vocabulary &vocab,
                        Scheme scheme) {
  switch (scheme) {
  case Scheme::kBbb:
    return bbb_decompose(mol, vocab);
  case Scheme::kPsm:
    return psm_decompose(mol, vocab);
  case Scheme::kSubcover:
    return subcover_decompose(mol, vocab);
  }
  throw Error(ErrorCode::kInvalidInput, "unknown scheme");
}

}  // namespace molfrag
