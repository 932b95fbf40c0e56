//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/corpus.h"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <fstream>
#include <istream>
#include <optional>

#include "molfrag/fingerprint.h"
#include "molfrag/smiles.h"

namespace molfrag {
namespace {

std::vector<std::string> split_fields(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty())
      fields.push_back(cur);
    cur.clear();
  };
  for (char c: line) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n')
      flush();
    else if (c != '"')
      cur += c;
  }
  flush();
  return fields;
}

template <class Fn>
void parallel_for(std::int64_t n, int workers, Fn fn) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 32) num_threads(std::max(1, workers))
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(molfrag_corpus_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
}

}  // namespace

std::vector<CorpusLine> read_corpus(std::istream &in) {
  std::vector<CorpusLine> lines;
  std::string text;
  int line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#')
      continue;
    std::vector<std::string> fields = split_fields(text);
    if (fields.empty())
      continue;
    CorpusLine cl;
    cl.line = line_no;
    cl.text = text;
    if (!cl.text.empty() && cl.text.back() == '\r')
      cl.text.pop_back();
    cl.smiles = fields[0];
    cl.id = fields.size() > 1 ? fields[1] : std::to_string(line_no);
    lines.push_back(std::move(cl));
  }
  return lines;
}

std::vector<CorpusLine> read_corpus_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIo, "cannot open " + path);
  return read_corpus(in);
}

std::vector<std::string> ParsedCorpus::ids() const {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const CorpusLine &l: lines)
    out.push_back(l.id);
  return out;
}

std::string ParsedCorpus::hash() const {
  Fnv1a h;
  for (const CorpusLine &l: lines) {
    h.update(l.smiles);
    h.update("\n");
  }
  return h.hex();
}

ParsedCorpus parse_corpus(const std::vector<CorpusLine> &lines, int workers) {
  const auto n = static_cast<std::int64_t>(lines.size());
  std::vector<std::optional<Molecule>> parsed(lines.size());
  std::vector<std::optional<ParseFailure>> failed(lines.size());
  parallel_for(n, workers, [&](std::int64_t i) {
    try {
      parsed[i] = parse_smiles(lines[i].smiles);
    } catch (const Error &e) {
      failed[i] = ParseFailure { lines[i].line, e.code(), e.what() };
    }
  });
  ParsedCorpus out;
  for (std::int64_t i = 0; i < n; ++i) {
    if (parsed[i]) {
      out.lines.push_back(lines[i]);
      out.molecules.push_back(std::move(*parsed[i]));
    } else {
      out.failures.push_back(std::move(*failed[i]));
    }
  }
  return out;
}

namespace {
void check_scheme(const Vocabulary &vocab, Scheme scheme) {
  if (scheme == Scheme::kPsm && vocab.scheme() != VocabScheme::kPsm)
    throw Error(ErrorCode::kSchemeMismatch,
                "psm decomposition needs a psm vocabulary");
  if (scheme == Scheme::kSubcover && vocab.scheme() != VocabScheme::kBbb)
    throw Error(ErrorCode::kSchemeMismatch,
                "subcover decomposition needs a bbb vocabulary");
}
}  // namespace

std::vector<Decomposition> decompose_corpus_serial(
    std::span<const Molecule> molecules, const Vocabulary &vocab,
    Scheme scheme) {
  check_scheme(vocab, scheme);
  std::vector<Decomposition> out;
  out.reserve(molecules.size());
  for (const Molecule &mol: molecules)
    out.push_back(decompose(mol, vocab, scheme));
  return out;
}

std::vector<Decomposition> decompose_corpus_parallel(
    std::span<const Molecule> molecules, const Vocabulary &vocab, Scheme scheme,
    int workers) {
  check_scheme(vocab, scheme);
  std::vector<Decomposition> out(molecules.size());
  parallel_for(static_cast<std::int64_t>(molecules.size()), workers,
               [&](std::int64_t i) {
                 out[i] = decompose(molecules[i], vocab, scheme);
               });
  return out;
}

std::vector<Decomposition> decompose_corpus(std::span<const Molecule> molecules,
                                            const Vocabulary &vocab,
                                            Scheme scheme, int workers) {
  return workers <= 1 ? decompose_corpus_serial(molecules, vocab, scheme)
                      : decompose_corpus_parallel(molecules, vocab, scheme,
                                                  workers);
}

}  // namespace molfrag
