//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MOLFRAG_FINGERPRINT_H_
#define MOLFRAG_FINGERPRINT_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace molfrag {

inline constexpr int kFormatVersion = 1;

// 64-bit FNV-1a, incremental.
class Fnv1a {
public:
  void update(std::string_view bytes);
  std::uint64_t value() const { return state_; }
  std::string hex() const;

private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string fnv1a_hex(std::string_view bytes);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace molfrag

#endif  // MOLFRAG_FINGERPRINT_H_
