//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/smiles.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "molfrag/canon.h"
#include "molfrag/error.h"

namespace molfrag {
namespace {

struct ParsedAtom {
  Element element = Element::kC;
  int charge = 0;
  int hydrogens = 0;  // explicit bracket H plus folded [H] atoms
  bool aromatic = false;
  bool is_hydrogen = false;
  int position = 0;
};

// '\0' means no bond symbol was written.
struct ParsedBond {
  int a;
  int b;
  char symbol;
  int position;
};

struct RingOpening {
  int atom;
  char symbol;
  int position;
};

class SmilesParser {
public:
  explicit SmilesParser(std::string_view text): text_(text) { }

  Molecule parse() {
    if (text_.empty())
      throw Error(ErrorCode::kSyntax, "empty SMILES", 0);

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '(') {
        if (prev_ < 0)
          fail("branch before any atom");
        if (pending_ != '\0')
          fail("bond symbol before '('");
        branches_.push_back(prev_);
        ++pos_;
        if (pos_ < text_.size() && text_[pos_] == ')')
          fail("empty branch");
      } else if (c == ')') {
        if (branches_.empty())
          fail("unbalanced ')'");
        if (pending_ != '\0')
          fail("bond symbol before ')'");
        prev_ = branches_.back();
        branches_.pop_back();
        ++pos_;
      } else if (c == '-' || c == '=' || c == '#' || c == ':' || c == '/'
                 || c == '\\') {
        if (pending_ != '\0')
          fail("two consecutive bond symbols");
        if (prev_ < 0)
          fail("bond symbol before any atom");
        pending_ = c;
        pending_pos_ = static_cast<int>(pos_);
        ++pos_;
      } else if (c == '$') {
        throw Error(ErrorCode::kUnsupportedFeature,
                    "quadruple bonds are not supported", static_cast<int>(pos_));
      } else if (c == '.') {
        throw Error(ErrorCode::kMultiComponent,
                    "multi-component SMILES are not accepted",
                    static_cast<int>(pos_));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        ring_bond();
      } else if (c == '[') {
        add_atom(bracket_atom());
      } else if (c == '*') {
        throw Error(ErrorCode::kUnsupportedElement,
                    "wildcard atoms are not supported", static_cast<int>(pos_));
      } else {
        add_atom(organic_atom());
      }
    }

    if (pending_ != '\0')
      throw Error(ErrorCode::kSyntax, "dangling bond symbol", pending_pos_);
    if (!branches_.empty())
      throw Error(ErrorCode::kSyntax, "unclosed branch",
                  static_cast<int>(text_.size()));
    if (!rings_.empty()) {
      const auto &[digit, open] = *rings_.begin();
      throw Error(ErrorCode::kUnclosedRing,
                  "ring bond " + std::to_string(digit) + " is never closed",
                  open.position);
    }
    if (atoms_.empty())
      throw Error(ErrorCode::kSyntax, "no atoms", 0);

    return build();
  }

private:
  [[noreturn]] void fail(const std::string &msg) const {
    throw Error(ErrorCode::kSyntax, msg + " at position " + std::to_string(pos_),
                static_cast<int>(pos_));
  }

  void add_atom(ParsedAtom atom) {
    const int idx = static_cast<int>(atoms_.size());
    atoms_.push_back(atom);
    if (prev_ >= 0)
      add_bond(prev_, idx, pending_, pending_pos_);
    pending_ = '\0';
    prev_ = idx;
  }

  void add_bond(int a, int b, char symbol, int position) {
    if (a == b)
      throw Error(ErrorCode::kSyntax, "ring bond joins an atom to itself",
                  position);
    for (const ParsedBond &pb: bonds_) {
      if ((pb.a == a && pb.b == b) || (pb.a == b && pb.b == a))
        throw Error(ErrorCode::kSyntax, "duplicate bond between two atoms",
                    position);
    }
    bonds_.push_back({ a, b, symbol, position });
  }

  ParsedAtom organic_atom() {
    const int start = static_cast<int>(pos_);
    const char c = text_[pos_];
    const char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    ParsedAtom atom;
    atom.position = start;

    if (c == 'C' && next == 'l') {
      atom.element = Element::kCl;
      pos_ += 2;
      return atom;
    }
    if (c == 'B' && next == 'r') {
      atom.element = Element::kBr;
      pos_ += 2;
      return atom;
    }

    static constexpr std::array<std::pair<char, Element>, 8> kUpper {
      { { 'B', Element::kB },
        { 'C', Element::kC },
        { 'N', Element::kN },
        { 'O', Element::kO },
        { 'P', Element::kP },
        { 'S', Element::kS },
        { 'F', Element::kF },
        { 'I', Element::kI } }
    };
    static constexpr std::array<std::pair<char, Element>, 6> kLower {
      { { 'b', Element::kB },
        { 'c', Element::kC },
        { 'n', Element::kN },
        { 'o', Element::kO },
        { 'p', Element::kP },
        { 's', Element::kS } }
    };
    for (auto [sym, el]: kUpper) {
      if (c == sym) {
        atom.element = el;
        ++pos_;
        return atom;
      }
    }
    for (auto [sym, el]: kLower) {
      if (c == sym) {
        atom.element = el;
        atom.aromatic = true;
        ++pos_;
        return atom;
      }
    }
    if (std::isupper(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::kUnsupportedElement,
                  std::string("element '") + c
                      + "' must be bracketed or is not supported",
                  start);
    fail(std::string("unexpected character '") + c + "'");
  }

  ParsedAtom bracket_atom() {
    ParsedAtom atom;
    atom.position = static_cast<int>(pos_);
    ++pos_;  // '['

    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw Error(ErrorCode::kUnsupportedFeature, "isotopes are not supported",
                  static_cast<int>(pos_));

    if (pos_ >= text_.size())
      fail("unterminated bracket atom");
    const int sym_pos = static_cast<int>(pos_);
    std::string symbol(1, text_[pos_++]);
    if (std::isupper(static_cast<unsigned char>(symbol[0]))) {
      if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])))
        symbol += text_[pos_++];
      if (symbol == "H") {
        atom.is_hydrogen = true;
      } else {
        auto el = element_from_symbol(symbol);
        if (!el)
          throw Error(ErrorCode::kUnsupportedElement,
                      "unsupported element '" + symbol + "'", sym_pos);
        atom.element = *el;
      }
    } else if (std::islower(static_cast<unsigned char>(symbol[0]))) {
      // Two-letter aromatic symbols: se, as, te.
      if (pos_ < text_.size() && symbol[0] == 's' && text_[pos_] == 'e') {
        symbol += text_[pos_++];
      } else if (pos_ < text_.size()
                 && ((symbol[0] == 'a' && text_[pos_] == 's')
                     || (symbol[0] == 't' && text_[pos_] == 'e'))) {
        throw Error(ErrorCode::kUnsupportedElement,
                    "unsupported element '" + symbol + text_[pos_] + "'",
                    sym_pos);
      }
      std::string upper = symbol;
      upper[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(upper[0])));
      auto el = element_from_symbol(upper);
      if (!el || !can_be_aromatic(*el))
        throw Error(ErrorCode::kUnsupportedElement,
                    "unsupported aromatic element '" + symbol + "'", sym_pos);
      atom.element = *el;
      atom.aromatic = true;
    } else if (symbol[0] == '*') {
      throw Error(ErrorCode::kUnsupportedElement,
                  "wildcard atoms are not supported", sym_pos);
    } else {
      --pos_;
      fail("expected element symbol");
    }

    // Chirality: @, @@, @TH1, @AL2, @SP3, @TB12, @OH24.
    if (pos_ < text_.size() && text_[pos_] == '@') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '@') {
        ++pos_;
      } else {
        while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))
               && text_[pos_] != 'H')
          ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }

    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      int count = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        count = text_[pos_++] - '0';
      atom.hydrogens = count;
    }

    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_++];
      int magnitude = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        magnitude = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          magnitude = magnitude * 10 + (text_[pos_++] - '0');
      } else {
        while (pos_ < text_.size() && text_[pos_] == sign) {
          ++magnitude;
          ++pos_;
        }
      }
      atom.charge = sign == '+' ? magnitude : -magnitude;
      if (atom.charge < kMinFormalCharge || atom.charge > kMaxFormalCharge)
        throw Error(ErrorCode::kValence, "formal charge out of range",
                    atom.position);
    }

    // Atom class, accepted and dropped.
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("malformed atom class");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }

    if (pos_ >= text_.size() || text_[pos_] != ']')
      fail("expected ']'");
    ++pos_;

    if (atom.is_hydrogen && (atom.charge != 0 || atom.hydrogens != 0))
      throw Error(ErrorCode::kUnsupportedElement,
                  "only neutral explicit hydrogens are supported", atom.position);
    if (!atom.is_hydrogen
        && allowed_valences(atom.element, atom.charge).empty())
      throw Error(ErrorCode::kValence, "unsupported charge state",
                  atom.position);
    return atom;
  }

  void ring_bond() {
    const int start = static_cast<int>(pos_);
    if (prev_ < 0)
      fail("ring bond before any atom");
    int digit;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))
          || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
        fail("malformed %nn ring bond");
      digit = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      digit = text_[pos_++] - '0';
    }

    auto it = rings_.find(digit);
    if (it == rings_.end()) {
      rings_.emplace(digit, RingOpening { prev_, pending_, start });
    } else {
      const RingOpening open = it->second;
      rings_.erase(it);
      char symbol = open.symbol;
      if (pending_ != '\0') {
        if (symbol != '\0' && !compatible(symbol, pending_))
          throw Error(ErrorCode::kSyntax,
                      "conflicting bond symbols on ring bond "
                          + std::to_string(digit),
                      start);
        if (symbol == '\0' || symbol == '/' || symbol == '\\')
          symbol = pending_;
      }
      add_bond(open.atom, prev_, symbol, start);
    }
    pending_ = '\0';
  }

  static bool compatible(char x, char y) {
    auto norm = [](char c) { return c == '/' || c == '\\' ? '-' : c; };
    return norm(x) == norm(y);
  }

  Molecule build();

  std::string_view text_;
  std::size_t pos_ = 0;
  int prev_ = -1;
  char pending_ = '\0';
  int pending_pos_ = -1;
  std::vector<int> branches_;
  std::map<int, RingOpening> rings_;
  std::vector<ParsedAtom> atoms_;
  std::vector<ParsedBond> bonds_;
};

// Perfect matching over the atoms that must carry a double bond. Atoms are
// visited in `order` and the most constrained one is expanded first;
// candidates follow the order of each adjacency list.
class Kekulizer {
public:
  Kekulizer(int n, const std::vector<std::vector<std::pair<int, int>>> &adj,
            const std::vector<char> &needs, const std::vector<int> &order)
      : adj_(adj), needs_(needs), order_(order), mate_(n, -1),
        mate_bond_(n, -1) { }

  bool solve() {
    int best = -1;
    int best_options = 1 << 30;
    for (int v: order_) {
      if (!needs_[v] || mate_[v] >= 0)
        continue;
      int options = 0;
      for (auto [u, bond]: adj_[v])
        if (needs_[u] && mate_[u] < 0)
          ++options;
      if (options < best_options) {
        best_options = options;
        best = v;
        if (options <= 1)
          break;
      }
    }
    if (best < 0)
      return true;
    if (best_options == 0)
      return false;

    for (auto [u, bond]: adj_[best]) {
      if (!needs_[u] || mate_[u] >= 0)
        continue;
      mate_[best] = u;
      mate_[u] = best;
      mate_bond_[best] = mate_bond_[u] = bond;
      if (solve())
        return true;
      mate_[best] = mate_[u] = -1;
      mate_bond_[best] = mate_bond_[u] = -1;
    }
    return false;
  }

  int mate_bond(int v) const { return mate_bond_[v]; }

private:
  const std::vector<std::vector<std::pair<int, int>>> &adj_;
  const std::vector<char> &needs_;
  const std::vector<int> &order_;
  std::vector<int> mate_;
  std::vector<int> mate_bond_;
};

Molecule SmilesParser::build() {
  // Fold explicit hydrogens into their heavy neighbor.
  std::vector<int> remap(atoms_.size(), -1);
  std::vector<char> dropped_bond(bonds_.size(), 0);
  for (int i = 0; i < static_cast<int>(atoms_.size()); ++i) {
    if (!atoms_[i].is_hydrogen)
      continue;
    int partner = -1;
    int count = 0;
    for (int j = 0; j < static_cast<int>(bonds_.size()); ++j) {
      const ParsedBond &pb = bonds_[j];
      if (pb.a != i && pb.b != i)
        continue;
      ++count;
      partner = pb.a == i ? pb.b : pb.a;
      if (pb.symbol == '=' || pb.symbol == '#' || pb.symbol == ':')
        throw Error(ErrorCode::kValence, "explicit hydrogen with a multiple bond",
                    atoms_[i].position);
      dropped_bond[j] = 1;
    }
    if (count != 1 || atoms_[partner].is_hydrogen)
      throw Error(ErrorCode::kUnsupportedElement,
                  "explicit hydrogen must be bonded to exactly one heavy atom",
                  atoms_[i].position);
    atoms_[partner].hydrogens += 1;
  }

  int n = 0;
  for (int i = 0; i < static_cast<int>(atoms_.size()); ++i)
    if (!atoms_[i].is_hydrogen)
      remap[i] = n++;

  std::vector<ParsedAtom> heavy;
  heavy.reserve(n);
  for (const ParsedAtom &a: atoms_)
    if (!a.is_hydrogen)
      heavy.push_back(a);

  struct Work {
    int a;
    int b;
    int order;  // 0 = aromatic, to be resolved
    int position;
  };
  std::vector<Work> work;
  for (int j = 0; j < static_cast<int>(bonds_.size()); ++j) {
    if (dropped_bond[j])
      continue;
    const ParsedBond &pb = bonds_[j];
    const int a = remap[pb.a];
    const int b = remap[pb.b];
    const bool both_aromatic = heavy[a].aromatic && heavy[b].aromatic;
    int order = 1;
    switch (pb.symbol) {
    case '=':
      order = 2;
      break;
    case '#':
      order = 3;
      break;
    case ':':
      order = both_aromatic ? 0 : 1;
      break;
    case '\0':
      order = both_aromatic ? 0 : 1;
      break;
    default:
      order = 1;
      break;
    }
    work.push_back({ a, b, order, pb.position });
  }

  // Which aromatic atoms still need a double bond.
  std::vector<int> load(n, 0);
  for (const Work &w: work) {
    const int v = w.order == 0 ? 1 : w.order;
    load[w.a] += v;
    load[w.b] += v;
  }
  std::vector<char> needs(n, 0);
  for (int i = 0; i < n; ++i) {
    const ParsedAtom &a = heavy[i];
    const int total = load[i] + a.hydrogens;
    if (!a.aromatic)
      continue;
    const int v = allowed_valences(a.element, a.charge).smallest_at_least(total);
    if (v < 0)
      throw Error(ErrorCode::kValence,
                  "aromatic atom exceeds its valence", a.position);
    needs[i] = v - total >= 1;
  }

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  std::vector<int> labels(work.size());
  bool pending = false;
  for (int j = 0; j < static_cast<int>(work.size()); ++j) {
    const Work &w = work[j];
    labels[j] = w.order == 0 ? 1 : w.order;
    if (w.order == 0 && needs[w.a] && needs[w.b]) {
      adj[w.a].push_back({ w.b, j });
      adj[w.b].push_back({ w.a, j });
      labels[j] = 0;
      pending = true;
    }
  }

  // Search in canonical order so that every spelling of a molecule gets
  // the same bond assignment.
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  if (pending) {
    // All-single surrogate carries the topology; labels carry the orders.
    std::vector<Atom> atoms;
    atoms.reserve(n);
    for (const ParsedAtom &a: heavy)
      atoms.push_back({ a.element, a.charge });
    std::vector<Bond> bonds;
    bonds.reserve(work.size());
    for (const Work &w: work)
      bonds.push_back({ w.a, w.b, BondOrder::kSingle });
    try {
      rank = canonical_ranks(Molecule(std::move(atoms), std::move(bonds)),
                             labels, true);
    } catch (const Error &) {
      // Malformed graphs are reported by the final construction below.
    }
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i)
    order[rank[i]] = i;
  for (auto &list: adj)
    std::sort(list.begin(), list.end(), [&](const auto &x, const auto &y) {
      return rank[x.first] < rank[y.first];
    });

  Kekulizer kek(n, adj, needs, order);
  if (!kek.solve()) {
    int where = 0;
    for (int i = 0; i < n; ++i)
      if (needs[i]) {
        where = heavy[i].position;
        break;
      }
    throw Error(ErrorCode::kKekulization,
                "cannot assign alternating bonds to aromatic system", where);
  }
  for (int i = 0; i < n; ++i)
    if (needs[i])
      work[kek.mate_bond(i)].order = 2;
  for (Work &w: work)
    if (w.order == 0)
      w.order = 1;

  std::vector<Atom> atoms;
  atoms.reserve(n);
  for (const ParsedAtom &a: heavy)
    atoms.push_back({ a.element, a.charge });
  std::vector<Bond> bonds;
  bonds.reserve(work.size());
  for (const Work &w: work)
    bonds.push_back({ w.a, w.b, static_cast<BondOrder>(w.order) });

  Molecule mol(std::move(atoms), std::move(bonds));
  for (int i = 0; i < n; ++i) {
    const ParsedAtom &a = heavy[i];
    if (mol.bond_order_sum(i) + a.hydrogens > max_valence(a.element, a.charge))
      throw Error(ErrorCode::kValence,
                  "atom " + std::string(element_symbol(a.element))
                      + " exceeds its maximum valence",
                  a.position);
  }
  return mol;
}

// Writer ------------------------------------------------------------------

std::string atom_text(const Molecule &mol, int v) {
  const Atom &a = mol.atom(v);
  const std::string_view sym = element_symbol(a.element);
  if (a.formal_charge == 0 && is_organic_subset(a.element))
    return std::string(sym);

  std::string out = "[";
  out += sym;
  const int sum = mol.bond_order_sum(v);
  const int valence = allowed_valences(a.element, a.formal_charge).smallest_at_least(sum);
  const int h = valence > sum ? valence - sum : 0;
  if (h > 0) {
    out += 'H';
    if (h > 1)
      out += std::to_string(h);
  }
  if (a.formal_charge != 0) {
    out += a.formal_charge > 0 ? '+' : '-';
    const int mag = std::abs(a.formal_charge);
    if (mag > 1)
      out += std::to_string(mag);
  }
  out += ']';
  return out;
}

const char *bond_text(BondOrder o) {
  switch (o) {
  case BondOrder::kDouble:
    return "=";
  case BondOrder::kTriple:
    return "#";
  default:
    return "";
  }
}

void append_ring_digit(std::string &out, int digit) {
  if (digit < 10) {
    out += static_cast<char>('0' + digit);
  } else {
    out += '%';
    out += static_cast<char>('0' + digit / 10);
    out += static_cast<char>('0' + digit % 10);
  }
}

// Writes a connected molecule whose atom indices are already canonical.
class CanonicalWriter {
public:
  explicit CanonicalWriter(const Molecule &mol)
      : mol_(mol), pre_(mol.num_atoms(), -1),
        tree_bond_(mol.num_bonds(), 0), ring_digit_(mol.num_bonds(), -1) { }

  std::string write() {
    if (mol_.num_atoms() == 0)
      return {};
    int counter = 0;
    classify(0, -1, counter);
    std::string out;
    emit(0, -1, out);
    return out;
  }

private:
  void classify(int v, int parent_bond, int &counter) {
    pre_[v] = counter++;
    for (const Neighbor &nb: mol_.neighbors(v)) {
      if (nb.bond == parent_bond)
        continue;
      if (pre_[nb.atom] < 0) {
        tree_bond_[nb.bond] = 1;
        classify(nb.atom, nb.bond, counter);
      }
    }
  }

  int take_digit() {
    for (int d = 1;; ++d) {
      if (d >= static_cast<int>(used_.size()))
        used_.resize(d + 1, 0);
      if (!used_[d]) {
        used_[d] = 1;
        return d;
      }
    }
  }

  void emit(int v, int parent_bond, std::string &out) {
    out += atom_text(mol_, v);

    // Ring closures: close bonds opened earlier, then open new ones. Digits
    // freed here are only reused from the next atom on.
    std::vector<std::pair<int, int>> closing;  // (partner pre-order, bond)
    std::vector<std::pair<int, int>> opening;
    for (const Neighbor &nb: mol_.neighbors(v)) {
      if (tree_bond_[nb.bond] || nb.bond == parent_bond)
        continue;
      if (pre_[nb.atom] < pre_[v])
        closing.push_back({ pre_[nb.atom], nb.bond });
      else
        opening.push_back({ pre_[nb.atom], nb.bond });
    }
    std::sort(closing.begin(), closing.end());
    std::sort(opening.begin(), opening.end());

    std::vector<int> freed;
    for (auto [p, bond]: closing) {
      append_ring_digit(out, ring_digit_[bond]);
      freed.push_back(ring_digit_[bond]);
    }
    for (auto [p, bond]: opening) {
      ring_digit_[bond] = take_digit();
      out += bond_text(mol_.bond(bond).order);
      append_ring_digit(out, ring_digit_[bond]);
    }
    for (int d: freed)
      used_[d] = 0;

    std::vector<std::pair<int, int>> children;  // (pre-order, neighbor)
    for (const Neighbor &nb: mol_.neighbors(v))
      if (tree_bond_[nb.bond] && nb.bond != parent_bond)
        children.push_back({ pre_[nb.atom], nb.atom });
    std::sort(children.begin(), children.end());

    for (std::size_t i = 0; i < children.size(); ++i) {
      const int child = children[i].second;
      const int bond = mol_.find_bond(v, child);
      const bool last = i + 1 == children.size();
      if (!last)
        out += '(';
      out += bond_text(mol_.bond(bond).order);
      emit(child, bond, out);
      if (!last)
        out += ')';
    }
  }

  const Molecule &mol_;
  std::vector<int> pre_;
  std::vector<char> tree_bond_;
  std::vector<int> ring_digit_;
  std::vector<char> used_;
};

std::string write_connected(const Molecule &mol) {
  const std::vector<int> rank = canonical_ranks(mol, true);
  std::vector<Atom> atoms(mol.num_atoms());
  for (int v = 0; v < mol.num_atoms(); ++v)
    atoms[rank[v]] = mol.atom(v);
  std::vector<Bond> bonds;
  bonds.reserve(mol.num_bonds());
  for (const Bond &b: mol.bonds())
    bonds.push_back({ rank[b.begin], rank[b.end], b.order });
  std::sort(bonds.begin(), bonds.end(), [](const Bond &x, const Bond &y) {
    return std::tie(x.begin, x.end) < std::tie(y.begin, y.end);
  });
  const Molecule relabeled(std::move(atoms), std::move(bonds));
  return CanonicalWriter(relabeled).write();
}

}  // namespace

Molecule parse_smiles(std::string_view text) {
  return SmilesParser(text).parse();
}

std::string write_smiles(const Molecule &mol) {
  auto components = connected_components(mol);
  if (components.size() <= 1)
    return write_connected(mol);

  std::vector<std::string> parts;
  parts.reserve(components.size());
  for (const auto &comp: components)
    parts.push_back(write_connected(induced_subgraph(mol, comp)));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      out += '.';
    out += parts[i];
  }
  return out;
}

}  // namespace molfrag
