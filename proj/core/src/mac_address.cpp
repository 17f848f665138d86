#include "ethframe/mac_address.hpp"

#include <fmt/format.h>

#include "ethframe/error.hpp"

namespace ethframe {

MacAddress MacAddress::from_bytes(ByteView bytes) {
  if (bytes.size() < size) {
    throw Error(Errc::ContractViolation, "MAC address needs 6 bytes");
  }
  Octets o{};
  for (std::size_t i = 0; i < size; ++i) o[i] = bytes[i];
  return MacAddress(o);
}

std::optional<MacAddress> MacAddress::parse(std::string_view text) {
  // "xx:" * 5 + "xx"
  if (text.size() != 17) return std::nullopt;
  Octets o{};
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t pos = i * 3;
    if (i > 0 && text[pos - 1] != ':') return std::nullopt;
    auto parsed = parse_hex(text.substr(pos, 2));
    if (!parsed) return std::nullopt;
    o[i] = (*parsed)[0];
  }
  return MacAddress(o);
}

std::string MacAddress::to_string() const {
  return fmt::format("{:02x}:{:02x}:{:02x}:{:02x}:{:02x}:{:02x}", octets_[0], octets_[1],
                     octets_[2], octets_[3], octets_[4], octets_[5]);
}

}  // namespace ethframe
