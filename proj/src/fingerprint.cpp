//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//

#include "molfrag/fingerprint.h"

#include <charconv>
#include <system_error>

namespace molfrag {

void Fnv1a::update(std::string_view bytes) {
  for (unsigned char c: bytes) {
    state_ ^= c;
    state_ *= 0x100000001b3ULL;
  }
}

std::string Fnv1a::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  std::uint64_t v = state_;
  for (int i = 15; i >= 0; --i, v >>= 4)
    out[i] = kDigits[v & 0xf];
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  Fnv1a h;
  h.update(bytes);
  return h.hex();
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc())
    return "nan";
  return std::string(buf, end);
}

}  // namespace molfrag
