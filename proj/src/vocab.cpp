//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/vocab.h"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "molfrag/decompose.h"
#include "molfrag/error.h"
#include "molfrag/fingerprint.h"
#include "molfrag/smiles.h"

namespace molfrag {

std::string_view scheme_name(VocabScheme s) {
  return s == VocabScheme::kBbb ? "bbb" : "psm";
}

VocabEntry make_entry(const MotifKey &key, std::int64_t count) {
  const Molecule mol = key_to_molecule(key);
  VocabEntry e;
  e.key = key;
  e.smiles = write_smiles(mol);
  e.count = count;
  e.atom_count = mol.num_atoms();
  e.has_ring = mol.num_bonds() >= mol.num_atoms();
  return e;
}

Vocabulary::Vocabulary(VocabScheme scheme, std::vector<VocabEntry> entries,
                       std::string corpus_hash)
    : scheme_(scheme), entries_(std::move(entries)),
      corpus_hash_(std::move(corpus_hash)) {
  patterns_.reserve(entries_.size());
  for (int i = 0; i < size(); ++i) {
    const VocabEntry &e = entries_[i];
    Molecule pattern = parse_smiles(e.smiles);
    if (canonical_key(pattern, true) != e.key)
      throw Error(ErrorCode::kMalformedVocab,
                  "entry " + std::to_string(i + 1) + " (" + e.smiles
                      + ") does not match its key");
    if (!index_.emplace(e.key.bytes, i).second)
      throw Error(ErrorCode::kDuplicateKey,
                  "duplicate motif " + e.smiles + " at rank "
                      + std::to_string(i + 1));
    patterns_.push_back(std::move(pattern));
  }
  search_order_.resize(entries_.size());
  std::iota(search_order_.begin(), search_order_.end(), 0);
  std::sort(search_order_.begin(), search_order_.end(), [&](int a, int b) {
    const VocabEntry &x = entries_[a];
    const VocabEntry &y = entries_[b];
    if (x.atom_count != y.atom_count)
      return x.atom_count > y.atom_count;
    if (x.count != y.count)
      return x.count > y.count;
    return x.key < y.key;
  });
}

int Vocabulary::find(const MotifKey &key) const {
  auto it = index_.find(key.bytes);
  return it == index_.end() ? -1 : it->second;
}

// BBB mining

namespace {
void count_bbb_molecule(const Molecule &mol, MotifCounts &counts) {
  for (const auto &frag: bbb_fragment(mol)) {
    if (frag.size() < 3)
      continue;
    ++counts[canonical_key(mol, frag, true).bytes];
  }
}

int clamp_workers(int workers) {
  return std::max(1, workers);
}
}  // namespace

MotifCounts bbb_count_serial(std::span<const Molecule> corpus) {
  MotifCounts counts;
  for (const Molecule &mol: corpus)
    count_bbb_molecule(mol, counts);
  return counts;
}

MotifCounts bbb_count_parallel(std::span<const Molecule> corpus, int workers) {
  const int threads = clamp_workers(workers);
  std::vector<MotifCounts> partial(threads);
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel num_threads(threads)
  {
    MotifCounts &local = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        count_bbb_molecule(corpus[i], local);
      } catch (...) {
#pragma omp critical(molfrag_bbb_failure)
        if (!failure)
          failure = std::current_exception();
      }
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  MotifCounts total = std::move(partial[0]);
  for (int t = 1; t < threads; ++t)
    for (const auto &[key, c]: partial[t])
      total[key] += c;
  return total;
}

Vocabulary rank_bbb_counts(const MotifCounts &counts, int k,
                           std::string corpus_hash) {
  std::vector<std::pair<std::int64_t, const std::string *>> ranked;
  ranked.reserve(counts.size());
  for (const auto &[key, c]: counts)
    ranked.emplace_back(c, &key);
  const auto better = [](const auto &x, const auto &y) {
    if (x.first != y.first)
      return x.first > y.first;
    return *x.second < *y.second;
  };
  const std::size_t keep = std::min<std::size_t>(ranked.size(),
                                                 static_cast<std::size_t>(k));
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    better);
  std::vector<VocabEntry> entries;
  entries.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i)
    entries.push_back(make_entry({ *ranked[i].second, true }, ranked[i].first));
  return Vocabulary(VocabScheme::kBbb, std::move(entries),
                    std::move(corpus_hash));
}

MiningResult bbb_build_vocab(std::span<const Molecule> corpus, int k,
                             int workers, std::string corpus_hash) {
  if (k < 1)
    throw Error(ErrorCode::kInvalidInput, "k must be at least 1");
  if (corpus.empty())
    throw Error(ErrorCode::kEmptyCorpus, "corpus is empty");
  const MotifCounts counts = workers <= 1 ? bbb_count_serial(corpus)
                                          : bbb_count_parallel(corpus, workers);
  MiningResult result;
  result.requested_k = k;
  result.available = static_cast<std::int64_t>(counts.size());
  result.vocab = rank_bbb_counts(counts, k, std::move(corpus_hash));
  return result;
}

// PSM mining

PsmState psm_initial_state(const Molecule &mol) {
  PsmState s;
  s.frag.resize(mol.num_atoms());
  std::iota(s.frag.begin(), s.frag.end(), 0);
  return s;
}

std::vector<std::pair<int, int>> psm_adjacent_pairs(const Molecule &mol,
                                                    const PsmState &state) {
  std::vector<std::pair<int, int>> pairs;
  for (const Bond &b: mol.bonds()) {
    int x = state.frag[b.begin];
    int y = state.frag[b.end];
    if (x == y)
      continue;
    if (x > y)
      std::swap(x, y);
    pairs.emplace_back(x, y);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<int> psm_merged_atoms(const PsmState &state, int a, int b) {
  std::vector<int> atoms;
  for (int v = 0; v < static_cast<int>(state.frag.size()); ++v)
    if (state.frag[v] == a || state.frag[v] == b)
      atoms.push_back(v);
  return atoms;
}

bool psm_apply_motif(const Molecule &mol, PsmState &state,
                     const MotifKey &motif) {
  const int motif_atoms = key_to_molecule(motif).num_atoms();
  std::vector<int> size(mol.num_atoms(), 0);
  for (int f: state.frag)
    ++size[f];
  std::vector<bool> touched(mol.num_atoms(), false);
  bool changed = false;
  for (const auto &[a, b]: psm_adjacent_pairs(mol, state)) {
    if (touched[a] || touched[b] || size[a] + size[b] != motif_atoms)
      continue;
    const std::vector<int> atoms = psm_merged_atoms(state, a, b);
    if (canonical_key(mol, atoms, true) != motif)
      continue;
    for (int v: atoms)
      state.frag[v] = a;
    touched[a] = touched[b] = true;
    changed = true;
  }
  return changed;
}

namespace {

std::vector<std::string> candidate_keys(const Molecule &mol,
                                        const PsmState &state) {
  std::vector<std::string> keys;
  for (const auto &[a, b]: psm_adjacent_pairs(mol, state))
    keys.push_back(
        canonical_key(mol, psm_merged_atoms(state, a, b), true).bytes);
  return keys;
}

void check_mining_args(std::span<const Molecule> corpus, int k) {
  if (k < 1)
    throw Error(ErrorCode::kInvalidInput, "k must be at least 1");
  if (corpus.empty())
    throw Error(ErrorCode::kEmptyCorpus, "corpus is empty");
}

class PsmMiner {
public:
  PsmMiner(std::span<const Molecule> corpus, int workers)
      : corpus_(corpus), workers_(clamp_workers(workers)),
        states_(corpus.size()), candidates_(corpus.size()) {}

  MiningResult run(int k, std::string corpus_hash) {
    const auto n = static_cast<std::int64_t>(corpus_.size());
    std::vector<std::vector<std::string>> fresh(corpus_.size());
    for_each_parallel(n, [&](std::int64_t i) {
      states_[i] = psm_initial_state(corpus_[i]);
      fresh[i] = candidate_keys(corpus_[i], states_[i]);
    });
    for (std::int64_t i = 0; i < n; ++i)
      install(i, fresh[i]);

    std::vector<VocabEntry> entries;
    while (static_cast<int>(entries.size()) < k) {
      const int best = select();
      if (best < 0)
        break;
      in_vocab_[best] = true;
      const MotifKey motif { keys_[best], true };
      entries.push_back(make_entry(motif, counts_[best]));

      std::vector<std::int64_t> affected;
      for (std::int64_t i = 0; i < n; ++i)
        if (std::find(candidates_[i].begin(), candidates_[i].end(), best)
            != candidates_[i].end())
          affected.push_back(i);

      std::vector<std::vector<std::string>> updated(affected.size());
      for_each_parallel(static_cast<std::int64_t>(affected.size()),
                        [&](std::int64_t j) {
                          const std::int64_t i = affected[j];
                          psm_apply_motif(corpus_[i], states_[i], motif);
                          updated[j] = candidate_keys(corpus_[i], states_[i]);
                        });
      for (std::size_t j = 0; j < affected.size(); ++j) {
        for (int id: candidates_[affected[j]])
          --counts_[id];
        install(affected[j], updated[j]);
      }
    }

    MiningResult result;
    result.requested_k = k;
    result.available = static_cast<std::int64_t>(entries.size());
    result.vocab =
        Vocabulary(VocabScheme::kPsm, std::move(entries), std::move(corpus_hash));
    return result;
  }

private:
  template <class Fn>
  void for_each_parallel(std::int64_t n, Fn fn) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers_)
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical(molfrag_psm_failure)
        if (!failure)
          failure = std::current_exception();
      }
    }
    if (failure)
      std::rethrow_exception(failure);
  }

  int intern(const std::string &key) {
    auto [it, inserted] = ids_.emplace(key, static_cast<int>(keys_.size()));
    if (inserted) {
      keys_.push_back(key);
      counts_.push_back(0);
      in_vocab_.push_back(false);
    }
    return it->second;
  }

  void install(std::int64_t i, const std::vector<std::string> &keys) {
    auto &ids = candidates_[i];
    ids.clear();
    for (const std::string &key: keys) {
      const int id = intern(key);
      ++counts_[id];
      ids.push_back(id);
    }
  }

  int select() const {
    int best = -1;
    for (int id = 0; id < static_cast<int>(keys_.size()); ++id) {
      if (in_vocab_[id] || counts_[id] <= 0)
        continue;
      if (best < 0 || counts_[id] > counts_[best]
          || (counts_[id] == counts_[best] && keys_[id] < keys_[best]))
        best = id;
    }
    return best;
  }

  std::span<const Molecule> corpus_;
  int workers_;
  std::vector<PsmState> states_;
  std::vector<std::vector<int>> candidates_;
  std::unordered_map<std::string, int> ids_;
  std::vector<std::string> keys_;
  std::vector<std::int64_t> counts_;
  std::vector<bool> in_vocab_;
};

}  // namespace

MiningResult psm_build_vocab(std::span<const Molecule> corpus, int k,
                             int workers, std::string corpus_hash) {
  check_mining_args(corpus, k);
  PsmMiner miner(corpus, workers);
  return miner.run(k, std::move(corpus_hash));
}

MiningResult psm_build_vocab_reference(std::span<const Molecule> corpus,
                                       int k) {
  check_mining_args(corpus, k);
  std::vector<PsmState> states;
  for (const Molecule &mol: corpus)
    states.push_back(psm_initial_state(mol));

  std::vector<VocabEntry> entries;
  std::map<std::string, bool> chosen;
  while (static_cast<int>(entries.size()) < k) {
    std::map<std::string, std::int64_t> counts;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (const std::string &key: candidate_keys(corpus[i], states[i]))
        if (!chosen.count(key))
          ++counts[key];
    const std::string *best = nullptr;
    std::int64_t best_count = 0;
    for (const auto &[key, c]: counts) {
      if (c > best_count) {
        best = &key;
        best_count = c;
      }
    }
    if (best == nullptr)
      break;
    const MotifKey motif { *best, true };
    chosen[*best] = true;
    entries.push_back(make_entry(motif, best_count));
    for (std::size_t i = 0; i < corpus.size(); ++i)
      psm_apply_motif(corpus[i], states[i], motif);
  }
  MiningResult result;
  result.requested_k = k;
  result.available = static_cast<std::int64_t>(entries.size());
  result.vocab = Vocabulary(VocabScheme::kPsm, std::move(entries));
  return result;
}

// Serialization

void save_vocab(const Vocabulary &vocab, std::ostream &out,
                const std::string &config_fingerprint) {
  nlohmann::ordered_json header;
  header["format_version"] = kFormatVersion;
  header["scheme"] = scheme_name(vocab.scheme());
  header["corpus_hash"] = vocab.corpus_hash();
  header["k"] = vocab.size();
  header["config"] = config_fingerprint;
  out << header.dump() << '\n';
  out << "# rank\tsmiles\tcount\tatom_count\thas_ring\n";
  for (int i = 0; i < vocab.size(); ++i) {
    const VocabEntry &e = vocab.entry(i);
    out << (i + 1) << '\t' << e.smiles << '\t' << e.count << '\t'
        << e.atom_count << '\t' << (e.has_ring ? 1 : 0) << '\n';
  }
}

namespace {
[[noreturn]] void malformed(int line, const std::string &what) {
  throw Error(ErrorCode::kMalformedVocab,
              "vocabulary line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(const std::string &field, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(field, &used);
  } catch (const std::exception &) {
    malformed(line, "expected an integer, got '" + field + "'");
  }
  if (used != field.size())
    malformed(line, "expected an integer, got '" + field + "'");
  return v;
}
}  // namespace

Vocabulary load_vocab(std::istream &in) {
  std::string line;
  int line_no = 0;
  nlohmann::json header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    try {
      header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception &) {
      malformed(line_no, "header is not valid JSON");
    }
    break;
  }
  if (!header.is_object())
    malformed(line_no, "missing header");

  VocabScheme scheme;
  std::string corpus_hash;
  std::int64_t k = 0;
  try {
    const int version = header.at("format_version").get<int>();
    if (version != kFormatVersion)
      throw Error(ErrorCode::kVersionMismatch,
                  "vocabulary format_version " + std::to_string(version)
                      + " is not supported (expected "
                      + std::to_string(kFormatVersion) + ")");
    const std::string s = header.at("scheme").get<std::string>();
    if (s == "bbb")
      scheme = VocabScheme::kBbb;
    else if (s == "psm")
      scheme = VocabScheme::kPsm;
    else
      malformed(line_no, "unknown scheme '" + s + "'");
    corpus_hash = header.value("corpus_hash", std::string());
    k = header.at("k").get<std::int64_t>();
  } catch (const nlohmann::json::exception &e) {
    malformed(line_no, std::string("bad header field: ") + e.what());
  }

  std::vector<VocabEntry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty() || line[0] == '#')
      continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t'))
      fields.push_back(field);
    if (fields.size() != 5)
      malformed(line_no, "expected 5 tab-separated fields");
    if (parse_int(fields[0], line_no)
        != static_cast<std::int64_t>(entries.size()) + 1)
      malformed(line_no, "ranks must be consecutive from 1");

    VocabEntry e;
    Molecule mol;
    try {
      mol = parse_smiles(fields[1]);
    } catch (const Error &err) {
      malformed(line_no, std::string("bad SMILES: ") + err.what());
    }
    if (!mol.is_connected())
      malformed(line_no, "motif is disconnected");
    e.key = canonical_key(mol, true);
    e.smiles = fields[1];
    e.count = parse_int(fields[2], line_no);
    e.atom_count = static_cast<int>(parse_int(fields[3], line_no));
    const std::int64_t ring = parse_int(fields[4], line_no);
    if (e.count <= 0)
      malformed(line_no, "count must be positive");
    if (e.atom_count != mol.num_atoms())
      malformed(line_no, "atom_count does not match the SMILES");
    if (e.atom_count < 2 || (scheme == VocabScheme::kBbb && e.atom_count < 3))
      malformed(line_no, "motif is too small for this scheme");
    if (ring != 0 && ring != 1)
      malformed(line_no, "has_ring must be 0 or 1");
    e.has_ring = ring == 1;
    if (e.has_ring != (mol.num_bonds() >= mol.num_atoms()))
      malformed(line_no, "has_ring does not match the SMILES");
    entries.push_back(std::move(e));
  }
  if (k != static_cast<std::int64_t>(entries.size()))
    malformed(line_no, "header k does not match the number of entries");
  return Vocabulary(scheme, std::move(entries), std::move(corpus_hash));
}

void save_vocab_file(const Vocabulary &vocab, const std::string &path,
                     const std::string &config_fingerprint) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  save_vocab(vocab, out, config_fingerprint);
  if (!out)
    throw Error(ErrorCode::kIo, "failed writing " + path);
}

Vocabulary load_vocab_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIo, "cannot open " + path);
  return load_vocab(in);
}

}  // namespace molfrag
