//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/record.h"

#include <json.hpp>

#include "molfrag/error.h"
#include "molfrag/smiles.h"

namespace molfrag {

using nlohmann::ordered_json;

std::string decomposition_record(const std::string &id, const Molecule &mol,
                                 const Decomposition &d,
                                 const Vocabulary &vocab) {
  ordered_json rec;
  rec["id"] = id;
  rec["scheme"] = scheme_name(d.scheme);
  ordered_json motifs = ordered_json::array();
  for (const MotifOccurrence &m: d.motifs) {
    ordered_json entry;
    entry["key"] = m.entry >= 0 ? vocab.entry(m.entry).smiles : std::string();
    entry["smiles"] = write_smiles(induced_subgraph(mol, m.atoms));
    entry["atoms"] = m.atoms;
    motifs.push_back(std::move(entry));
  }
  rec["motifs"] = std::move(motifs);
  rec["singles"] = d.singles;
  ordered_json inter = ordered_json::array();
  for (int b: d.inter_bonds) {
    const Bond &bond = mol.bond(b);
    inter.push_back({ bond.begin, bond.end, order_value(bond.order) });
  }
  rec["inter_bonds"] = std::move(inter);
  return rec.dump();
}

namespace {
[[noreturn]] void bad(const std::string &what) {
  throw Error(ErrorCode::kInvalidInput, "scored graph record: " + what);
}

BondOrder to_order(int o) {
  if (o < 1 || o > 3)
    bad("bond order must be 1, 2 or 3");
  return static_cast<BondOrder>(o);
}
}  // namespace

ScoredBondGraph parse_scored_graph(const std::string &line, std::string &id) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception &) {
    bad("not valid JSON");
  }
  ScoredBondGraph g;
  try {
    id = j.contains("id") ? (j["id"].is_string() ? j["id"].get<std::string>()
                                                 : j["id"].dump())
                          : std::string();
    for (const auto &a: j.at("atoms")) {
      const std::string sym = a.at("element").get<std::string>();
      const auto el = element_from_symbol(sym);
      if (!el)
        bad("unsupported element '" + sym + "'");
      g.atoms.push_back({ *el, a.value("charge", 0) });
    }
    if (j.contains("motifs"))
      for (const auto &m: j["motifs"])
        g.motifs.push_back(m.get<std::vector<int>>());
    if (j.contains("motif_bonds"))
      for (const auto &b: j["motif_bonds"])
        g.motif_bonds.push_back(
            { b.at(0).get<int>(), b.at(1).get<int>(),
              to_order(b.at(2).get<int>()) });
    if (j.contains("candidates"))
      for (const auto &c: j["candidates"])
        g.candidates.push_back({ c.at(0).get<int>(), c.at(1).get<int>(),
                                 to_order(c.at(2).get<int>()),
                                 c.at(3).get<double>() });
  } catch (const nlohmann::json::exception &e) {
    bad(e.what());
  }
  validate(g);
  return g;
}

std::string scored_graph_record(const std::string &id,
                                const ScoredBondGraph &g) {
  ordered_json rec;
  rec["id"] = id;
  ordered_json atoms = ordered_json::array();
  for (const Atom &a: g.atoms)
    atoms.push_back({ { "element", element_symbol(a.element) },
                      { "charge", a.formal_charge } });
  rec["atoms"] = std::move(atoms);
  rec["motifs"] = g.motifs;
  ordered_json bonds = ordered_json::array();
  for (const Bond &b: g.motif_bonds)
    bonds.push_back({ b.begin, b.end, order_value(b.order) });
  rec["motif_bonds"] = std::move(bonds);
  ordered_json cands = ordered_json::array();
  for (const BondCandidate &c: g.candidates)
    cands.push_back({ c.u, c.v, order_value(c.order), c.confidence });
  rec["candidates"] = std::move(cands);
  return rec.dump();
}

}  // namespace molfrag
