//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_ELEMENT_H_
#define MOLFRAG_ELEMENT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace molfrag {

// Heavy elements accepted by the toolkit. The value is the atomic number.
enum class Element : std::uint8_t {
  kB = 5,
  kC = 6,
  kN = 7,
  kO = 8,
  kF = 9,
  kSi = 14,
  kP = 15,
  kS = 16,
  kCl = 17,
  kSe = 34,
  kBr = 35,
  kI = 53,
};

inline constexpr int kMinFormalCharge = -4;
inline constexpr int kMaxFormalCharge = 4;

constexpr int atomic_number(Element e) {
  return static_cast<int>(e);
}

std::string_view element_symbol(Element e);

// Exact, case-sensitive lookup of an element symbol ("C", "Cl", "Se", ...).
std::optional<Element> element_from_symbol(std::string_view symbol);

std::optional<Element> element_from_atomic_number(int z);

// Elements that SMILES may write without brackets.
bool is_organic_subset(Element e);

// Elements that may appear as lowercase aromatic atoms.
bool can_be_aromatic(Element e);

// Allowed total bond orders (including hydrogens) for an element in a given
// charge state, sorted ascending. Empty when the charge state is not
// chemically meaningful for the element.
struct Valences {
  std::array<std::int8_t, 3> values {};
  int size = 0;

  bool empty() const { return size == 0; }
  int max() const { return size == 0 ? -1 : values[size - 1]; }
  // Smallest allowed valence >= total, or -1.
  int smallest_at_least(int total) const;
};

// This is the only valence table in the project; the parser, kekulizer,
// and assembly post-processing all query it.
Valences allowed_valences(Element e, int formal_charge);

inline int max_valence(Element e, int formal_charge) {
  return allowed_valences(e, formal_charge).max();
}

}  // namespace molfrag

#endif  // MOLFRAG_ELEMENT_H_
