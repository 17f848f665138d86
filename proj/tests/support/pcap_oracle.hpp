#pragma once

// Converts a little-endian capture to big-endian by reversing every
// multi-byte header field in place, walking the file layout directly rather
// than going through the reader.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>

namespace ethframe::testing {

inline std::string byte_swap_capture(std::string file) {
  auto reverse = [&](std::size_t at, std::size_t n) {
    std::reverse(file.begin() + static_cast<std::ptrdiff_t>(at),
                 file.begin() + static_cast<std::ptrdiff_t>(at + n));
  };
  // magic, major, minor, thiszone, sigfigs, snaplen, linktype
  for (auto [at, n] : {std::pair{0, 4}, {4, 2}, {6, 2}, {8, 4}, {12, 4}, {16, 4}, {20, 4}}) {
    reverse(static_cast<std::size_t>(at), static_cast<std::size_t>(n));
  }
  std::size_t pos = 24;
  while (pos + 16 <= file.size()) {
    const auto* p = reinterpret_cast<const unsigned char*>(file.data() + pos + 8);
    const std::size_t incl = p[0] | (p[1] << 8) | (p[2] << 16) | (std::size_t{p[3]} << 24);
    // ts_sec, ts_usec, incl_len, orig_len
    for (std::size_t f = 0; f < 4; ++f) reverse(pos + 4 * f, 4);
    pos += 16 + incl;
  }
  return file;
}

}  // namespace ethframe::testing
