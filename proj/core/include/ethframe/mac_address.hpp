#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ethframe/bytes.hpp"

namespace ethframe {

/// 48-bit IEEE MAC address. Canonical text form is lowercase,
/// colon-separated hex: "00:b0:d0:49:2a:b9".
class MacAddress {
 public:
  static constexpr std::size_t size = 6;
  using Octets = std::array<Byte, size>;

  constexpr MacAddress() noexcept = default;
  constexpr explicit MacAddress(const Octets& octets) noexcept : octets_(octets) {}

  /// Reads the first six bytes of `bytes`. Throws Error(ContractViolation)
  /// when fewer are available.
  static MacAddress from_bytes(ByteView bytes);

  /// Accepts "xx:xx:xx:xx:xx:xx" in either case.
  static std::optional<MacAddress> parse(std::string_view text);

  static constexpr MacAddress broadcast() noexcept {
    return MacAddress(Octets{0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF});
  }

  [[nodiscard]] constexpr const Octets& octets() const noexcept { return octets_; }

  [[nodiscard]] constexpr bool is_broadcast() const noexcept {
    for (Byte b : octets_) {
      if (b != 0xFF) return false;
    }
    return true;
  }

  /// I/G bit: least-significant bit of the first octet.
  [[nodiscard]] constexpr bool is_group() const noexcept { return (octets_[0] & 0x01) != 0; }

  [[nodiscard]] std::string to_string() const;

  friend constexpr auto operator<=>(const MacAddress&, const MacAddress&) = default;

 private:
  Octets octets_{};
};

}  // namespace ethframe
