//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/element.h"

#include "molfrag/error.h"

namespace molfrag {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::kSyntax:
    return "syntax";
  case ErrorCode::kUnsupportedElement:
    return "unsupported-element";
  case ErrorCode::kUnsupportedFeature:
    return "unsupported-feature";
  case ErrorCode::kKekulization:
    return "kekulization";
  case ErrorCode::kValence:
    return "valence";
  case ErrorCode::kUnclosedRing:
    return "unclosed-ring";
  case ErrorCode::kMultiComponent:
    return "multi-component";
  case ErrorCode::kInvalidGraph:
    return "invalid-graph";
  case ErrorCode::kDisconnected:
    return "disconnected";
  case ErrorCode::kSchemeMismatch:
    return "scheme-mismatch";
  case ErrorCode::kMalformedVocab:
    return "malformed-vocab";
  case ErrorCode::kVersionMismatch:
    return "version-mismatch";
  case ErrorCode::kDuplicateKey:
    return "duplicate-key";
  case ErrorCode::kEmptyCorpus:
    return "empty-corpus";
  case ErrorCode::kNoMotifs:
    return "no-motifs";
  case ErrorCode::kInvalidInput:
    return "invalid-input";
  case ErrorCode::kIo:
    return "io";
  }
  return "unknown";
}

namespace {
struct ElementInfo {
  Element element;
  std::string_view symbol;
  int valence_electrons;
  int period;
  bool organic;
  bool aromatic;
};

constexpr std::array kElements {
  ElementInfo { Element::kB, "B", 3, 2, true, true },
  ElementInfo { Element::kC, "C", 4, 2, true, true },
  ElementInfo { Element::kN, "N", 5, 2, true, true },
  ElementInfo { Element::kO, "O", 6, 2, true, true },
  ElementInfo { Element::kF, "F", 7, 2, true, false },
  ElementInfo { Element::kSi, "Si", 4, 3, false, false },
  ElementInfo { Element::kP, "P", 5, 3, true, true },
  ElementInfo { Element::kS, "S", 6, 3, true, true },
  ElementInfo { Element::kCl, "Cl", 7, 3, true, false },
  ElementInfo { Element::kSe, "Se", 6, 4, false, true },
  ElementInfo { Element::kBr, "Br", 7, 4, true, false },
  ElementInfo { Element::kI, "I", 7, 5, true, false },
};

const ElementInfo &info(Element e) {
  for (const auto &ei: kElements)
    if (ei.element == e)
      return ei;
  throw Error(ErrorCode::kUnsupportedElement, "unknown element");
}

Valences make(std::initializer_list<int> vs) {
  Valences v;
  for (int x: vs)
    v.values[v.size++] = static_cast<std::int8_t>(x);
  return v;
}
}  // namespace

std::string_view element_symbol(Element e) {
  return info(e).symbol;
}

std::optional<Element> element_from_symbol(std::string_view symbol) {
  for (const auto &ei: kElements)
    if (ei.symbol == symbol)
      return ei.element;
  return std::nullopt;
}

std::optional<Element> element_from_atomic_number(int z) {
  for (const auto &ei: kElements)
    if (atomic_number(ei.element) == z)
      return ei.element;
  return std::nullopt;
}

bool is_organic_subset(Element e) {
  return info(e).organic;
}

bool can_be_aromatic(Element e) {
  return info(e).aromatic;
}

int Valences::smallest_at_least(int total) const {
  for (int i = 0; i < size; ++i)
    if (values[i] >= total)
      return values[i];
  return -1;
}

Valences allowed_valences(Element e, int formal_charge) {
  if (formal_charge < kMinFormalCharge || formal_charge > kMaxFormalCharge)
    return {};

  if (formal_charge == 0) {
    switch (e) {
    case Element::kP:
      return make({ 3, 5 });
    case Element::kS:
      return make({ 2, 4, 6 });
    case Element::kSe:
      return make({ 2, 6 });
    default:
      break;
    }
  }

  // Charged atoms take the valence of their isoelectronic neutral
  // counterpart: N+ behaves like C, O- like F, C- like N, B- like C.
  const ElementInfo &ei = info(e);
  const int electrons = ei.valence_electrons - formal_charge;
  if (electrons < 1 || electrons > 7)
    return {};
  if (electrons <= 4)
    return make({ electrons });
  if (ei.period == 2)
    return make({ 8 - electrons });

  switch (electrons) {
  case 5:
    return make({ 3, 5 });
  case 6:
    return make({ 2, 4, 6 });
  default:
    return make({ 1 });
  }
}

}  // namespace molfrag
