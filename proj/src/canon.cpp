//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/canon.h"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "molfrag/error.h"

namespace molfrag {
namespace {

class Canonicalizer {
public:
  Canonicalizer(const Molecule &mol, bool charge_sensitive,
                std::span<const int> bond_labels = {})
      : mol_(mol), n_(mol.num_atoms()), charge_sensitive_(charge_sensitive),
        bond_labels_(bond_labels) {
    for (int v = 0; v < n_; ++v)
      max_degree_ = std::max(max_degree_, mol.degree(v));
    max_degree_ = std::max(max_degree_, 1);
    sig_.resize(static_cast<std::size_t>(n_) * max_degree_);
    order_.resize(n_);
  }

  std::vector<int> run() {
    if (n_ == 0)
      return {};
    std::vector<int> color = initial_colors();
    refine(color);
    std::vector<int> path;
    search(color, path);

    std::vector<int> rank(n_);
    for (int p = 0; p < n_; ++p)
      rank[best_inv_[p]] = p;
    return rank;
  }

  const std::string &encoding() const { return best_; }

private:
  int label(int bond) const {
    return bond_labels_.empty() ? order_value(mol_.bond(bond).order)
                                : bond_labels_[bond];
  }

  std::vector<int> initial_colors() const {
    std::vector<std::uint64_t> inv(n_);
    for (int v = 0; v < n_; ++v) {
      const Atom &a = mol_.atom(v);
      std::uint64_t counts[4] = { 0, 0, 0, 0 };
      for (const Neighbor &nb: mol_.neighbors(v))
        ++counts[label(nb.bond)];
      const std::uint64_t charge =
          charge_sensitive_ ? static_cast<std::uint64_t>(a.formal_charge + 8) : 0;
      inv[v] = (static_cast<std::uint64_t>(atomic_number(a.element)) << 48)
               | (charge << 40)
               | (static_cast<std::uint64_t>(mol_.degree(v)) << 24)
               | (counts[1] << 16) | (counts[2] << 8) | counts[3];
    }
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return inv[x] < inv[y]; });
    std::vector<int> color(n_);
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && inv[idx[i]] == inv[idx[i - 1]])
        color[idx[i]] = color[idx[i - 1]];
      else
        color[idx[i]] = i;
    }
    return color;
  }

  static int count_cells(const std::vector<int> &color) {
    int cells = 0;
    std::vector<char> seen(color.size(), 0);
    for (int c: color) {
      if (!seen[c]) {
        seen[c] = 1;
        ++cells;
      }
    }
    return cells;
  }

  // Refines `color` to the coarsest equitable partition below it. Each color
  // is the first position of its cell in the ordered partition, so refined
  // cells stay inside their parent's position range.
  void refine(std::vector<int> &color) {
    int cells = count_cells(color);
    const int width = max_degree_;
    std::vector<int> next(n_);
    while (cells < n_) {
      for (int v = 0; v < n_; ++v) {
        int *row = &sig_[static_cast<std::size_t>(v) * width];
        int k = 0;
        for (const Neighbor &nb: mol_.neighbors(v))
          row[k++] = color[nb.atom] * 4 + label(nb.bond);
        std::sort(row, row + k);
        std::fill(row + k, row + width, INT_MAX);
      }
      std::iota(order_.begin(), order_.end(), 0);
      auto less = [&](int x, int y) {
        if (color[x] != color[y])
          return color[x] < color[y];
        const int *rx = &sig_[static_cast<std::size_t>(x) * width];
        const int *ry = &sig_[static_cast<std::size_t>(y) * width];
        return std::lexicographical_compare(rx, rx + width, ry, ry + width);
      };
      std::sort(order_.begin(), order_.end(), less);
      int new_cells = 0;
      for (int i = 0; i < n_; ++i) {
        const int v = order_[i];
        if (i > 0 && !less(order_[i - 1], v)) {
          next[v] = next[order_[i - 1]];
        } else {
          next[v] = i;
          ++new_cells;
        }
      }
      color.swap(next);
      if (new_cells == cells)
        break;
      cells = new_cells;
    }
  }

  std::string encode(const std::vector<int> &pos) const {
    std::string s;
    s.reserve(2 + 2 * n_ + 5 * mol_.num_bonds());
    s += static_cast<char>((n_ >> 8) & 0xff);
    s += static_cast<char>(n_ & 0xff);
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v)
      inv[pos[v]] = v;
    for (int p = 0; p < n_; ++p) {
      const Atom &a = mol_.atom(inv[p]);
      s += static_cast<char>(atomic_number(a.element));
      s += static_cast<char>(charge_sensitive_ ? a.formal_charge + 16 : 16);
    }
    std::vector<std::uint64_t> edges;
    edges.reserve(mol_.num_bonds());
    for (int i = 0; i < mol_.num_bonds(); ++i) {
      const Bond &b = mol_.bond(i);
      std::uint64_t x = pos[b.begin];
      std::uint64_t y = pos[b.end];
      if (x > y)
        std::swap(x, y);
      edges.push_back((x << 24) | (y << 8)
                      | static_cast<std::uint64_t>(label(i)));
    }
    std::sort(edges.begin(), edges.end());
    for (std::uint64_t e: edges) {
      const std::uint64_t x = e >> 24;
      const std::uint64_t y = (e >> 8) & 0xffff;
      s += static_cast<char>((x >> 8) & 0xff);
      s += static_cast<char>(x & 0xff);
      s += static_cast<char>((y >> 8) & 0xff);
      s += static_cast<char>(y & 0xff);
      s += static_cast<char>(e & 0xff);
    }
    return s;
  }

  void leaf(const std::vector<int> &color) {
    std::string enc = encode(color);
    if (best_inv_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_inv_.assign(n_, 0);
      for (int v = 0; v < n_; ++v)
        best_inv_[color[v]] = v;
      return;
    }
    if (enc == best_) {
      std::vector<int> gamma(n_);
      bool identity = true;
      for (int v = 0; v < n_; ++v) {
        gamma[v] = best_inv_[color[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity)
        automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representatives under the automorphisms found so far that fix
  // every vertex on the current path.
  std::vector<int> orbits(const std::vector<int> &path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto &gamma: automorphisms_) {
      bool fixes = true;
      for (int v: path) {
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes)
        continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gamma[v]);
        if (a != b)
          parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v)
      parent[v] = find(v);
    return parent;
  }

  void search(const std::vector<int> &color, std::vector<int> &path) {
    std::vector<int> size(n_, 0);
    for (int c: color)
      ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target]))
        target = c;
    }
    if (target < 0) {
      leaf(color);
      return;
    }

    std::vector<int> members;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target)
        members.push_back(v);

    std::vector<int> tried;
    for (int v: members) {
      if (!tried.empty() && !automorphisms_.empty()) {
        const std::vector<int> orbit = orbits(path);
        bool equivalent = false;
        for (int u: tried) {
          if (orbit[u] == orbit[v]) {
            equivalent = true;
            break;
          }
        }
        if (equivalent)
          continue;
      }

      std::vector<int> child = color;
      for (int u: members)
        if (u != v)
          child[u] = target + 1;
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
      tried.push_back(v);
    }
  }

  const Molecule &mol_;
  int n_;
  bool charge_sensitive_;
  std::span<const int> bond_labels_;
  int max_degree_ = 0;
  std::vector<int> sig_;
  std::vector<int> order_;

  std::string best_;
  std::vector<int> best_inv_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<int> canonical_ranks(const Molecule &mol, bool charge_sensitive) {
  Canonicalizer canon(mol, charge_sensitive);
  return canon.run();
}

std::vector<int> canonical_ranks(const Molecule &mol,
                                 std::span<const int> bond_labels,
                                 bool charge_sensitive) {
  if (static_cast<int>(bond_labels.size()) != mol.num_bonds())
    throw Error(ErrorCode::kInvalidInput, "one label per bond required");
  for (int l: bond_labels)
    if (l < 0 || l > 3)
      throw Error(ErrorCode::kInvalidInput, "bond labels must lie in [0, 3]");
  Canonicalizer canon(mol, charge_sensitive, bond_labels);
  return canon.run();
}

MotifKey canonical_key(const Molecule &mol, bool charge_sensitive) {
  if (mol.num_atoms() == 0)
    throw Error(ErrorCode::kInvalidInput, "cannot key an empty fragment");
  if (!mol.is_connected())
    throw Error(ErrorCode::kDisconnected, "cannot key a disconnected fragment");
  Canonicalizer canon(mol, charge_sensitive);
  canon.run();
  return { canon.encoding(), charge_sensitive };
}

MotifKey canonical_key(const Molecule &mol, std::span<const int> atoms,
                       bool charge_sensitive) {
  return canonical_key(induced_subgraph(mol, atoms), charge_sensitive);
}

Molecule key_to_molecule(const MotifKey &key) {
  const std::string &s = key.bytes;
  auto byte = [&](std::size_t i) {
    if (i >= s.size())
      throw Error(ErrorCode::kInvalidInput, "truncated motif key");
    return static_cast<int>(static_cast<unsigned char>(s[i]));
  };
  const int n = (byte(0) << 8) | byte(1);
  std::vector<Atom> atoms(n);
  std::size_t i = 2;
  for (int p = 0; p < n; ++p, i += 2) {
    const auto el = element_from_atomic_number(byte(i));
    if (!el)
      throw Error(ErrorCode::kInvalidInput, "motif key holds unknown element");
    atoms[p] = { *el, byte(i + 1) - 16 };
  }
  std::vector<Bond> bonds;
  for (; i < s.size(); i += 5) {
    const int a = (byte(i) << 8) | byte(i + 1);
    const int b = (byte(i + 2) << 8) | byte(i + 3);
    const int order = byte(i + 4);
    if (order < 1 || order > 3)
      throw Error(ErrorCode::kInvalidInput, "motif key holds bad bond order");
    bonds.push_back({ a, b, static_cast<BondOrder>(order) });
  }
  return Molecule(std::move(atoms), std::move(bonds));
}

std::string to_hex(const MotifKey &key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(key.bytes.size() * 2);
  for (unsigned char c: key.bytes) {
    out += kDigits[c >> 4];
    out += kDigits[c & 0xf];
  }
  return out;
}

}  // namespace molfrag
