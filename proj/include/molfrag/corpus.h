//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_CORPUS_H_
#define MOLFRAG_CORPUS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "molfrag/decompose.h"
#include "molfrag/error.h"
#include "molfrag/molecule.h"
#include "molfrag/vocab.h"

namespace molfrag {

// One non-blank, non-comment input line. The SMILES is the first field
// (fields split on whitespace or commas, surrounding quotes removed); the id
// is the second field if present, otherwise the line number.
struct CorpusLine {
  int line = 0;
  std::string id;
  std::string smiles;
  std::string text;  // the line as read
};

std::vector<CorpusLine> read_corpus(std::istream &in);
std::vector<CorpusLine> read_corpus_file(const std::string &path);

struct ParseFailure {
  int line = 0;
  ErrorCode code = ErrorCode::kSyntax;
  std::string message;
};

struct ParsedCorpus {
  std::vector<CorpusLine> lines;  // successfully parsed, in input order
  std::vector<Molecule> molecules;
  std::vector<ParseFailure> failures;

  std::vector<std::string> ids() const;
  // FNV-1a over the parsed SMILES strings, newline separated.
  std::string hash() const;
};

ParsedCorpus parse_corpus(const std::vector<CorpusLine> &lines, int workers);

std::vector<Decomposition> decompose_corpus_serial(
    std::span<const Molecule> molecules, const Vocabulary &vocab, Scheme scheme);

std::vector<Decomposition> decompose_corpus_parallel(
    std::span<const Molecule> molecules, const Vocabulary &vocab, Scheme scheme,
    int workers);

std::vector<Decomposition> decompose_corpus(std::span<const Molecule> molecules,
                                            const Vocabulary &vocab,
                                            Scheme scheme, int workers);

}  // namespace molfrag

#endif  // MOLFRAG_CORPUS_H_
