//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_ERROR_H_
#define MOLFRAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace molfrag {

enum class ErrorCode {
  kSyntax,
  kUnsupportedElement,
  kUnsupportedFeature,
  kKekulization,
  kValence,
  kUnclosedRing,
  kMultiComponent,
  kInvalidGraph,
  kDisconnected,
  kSchemeMismatch,
  kMalformedVocab,
  kVersionMismatch,
  kDuplicateKey,
  kEmptyCorpus,
  kNoMotifs,
  kInvalidInput,
  kIo,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this type. `position()` is the
// zero-based character offset for SMILES errors and -1 otherwise.
class Error: public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what, int position = -1)
      : std::runtime_error(what), code_(code), position_(position) { }

  ErrorCode code() const noexcept { return code_; }
  int position() const noexcept { return position_; }

private:
  ErrorCode code_;
  int position_;
};

}  // namespace molfrag

#endif  // MOLFRAG_ERROR_H_
