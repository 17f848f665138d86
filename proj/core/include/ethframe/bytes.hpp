#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ethframe {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;
using ByteView = std::span<const Byte>;

/// A half-open (offset, length) window into a frame's bytes. Views never own
/// data; they are resolved against the original buffer with `slice`.
struct ByteRange {
  std::size_t offset = 0;
  std::size_t length = 0;

  [[nodiscard]] constexpr std::size_t end() const noexcept { return offset + length; }
  [[nodiscard]] constexpr bool empty() const noexcept { return length == 0; }
  [[nodiscard]] constexpr bool within(std::size_t size) const noexcept {
    return offset <= size && length <= size - offset;
  }

  friend constexpr bool operator==(const ByteRange&, const ByteRange&) = default;
};

/// Resolves `range` against `bytes`. Throws std::out_of_range if the range
/// does not fit.
ByteView slice(ByteView bytes, ByteRange range);

// Big-endian field access. Callers are responsible for bounds.
[[nodiscard]] constexpr std::uint16_t load_be16(ByteView b, std::size_t off) noexcept {
  return static_cast<std::uint16_t>((b[off] << 8) | b[off + 1]);
}

[[nodiscard]] constexpr std::uint32_t load_be32(ByteView b, std::size_t off) noexcept {
  return (std::uint32_t{b[off]} << 24) | (std::uint32_t{b[off + 1]} << 16) |
         (std::uint32_t{b[off + 2]} << 8) | std::uint32_t{b[off + 3]};
}

inline void append_be16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<Byte>(v >> 8));
  out.push_back(static_cast<Byte>(v & 0xFF));
}

inline void append_be32(Bytes& out, std::uint32_t v) {
  append_be16(out, static_cast<std::uint16_t>(v >> 16));
  append_be16(out, static_cast<std::uint16_t>(v & 0xFFFF));
}

/// Contiguous lowercase hex, two digits per byte ("0000ff").
std::string to_hex(ByteView bytes);

/// Inverse of to_hex. Accepts either case; returns nullopt on odd length or a
/// non-hex digit.
std::optional<Bytes> parse_hex(std::string_view text);

}  // namespace ethframe
