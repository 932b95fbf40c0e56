//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_TOOLS_COMMANDS_H_
#define MOLFRAG_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "molfrag/error.h"

namespace molfrag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitScheme = 3;
inline constexpr int kExitIo = 4;

int exit_code_for(ErrorCode code);

// Runs one command line (without the program name). Data goes to `out` or
// to the files named on the command line; logs and summaries go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

// Worker count used when --workers is absent: MOLFRAG_WORKERS if set and
// positive, otherwise the number of hardware threads.
int default_workers();

}  // namespace molfrag::cli

#endif  // MOLFRAG_TOOLS_COMMANDS_H_
