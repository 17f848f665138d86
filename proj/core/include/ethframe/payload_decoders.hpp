#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "ethframe/bytes.hpp"
#include "ethframe/frame_model.hpp"
#include "ethframe/mac_address.hpp"
#include "ethframe/registry.hpp"

namespace ethframe {

class Ipv4Address {
 public:
  using Octets = std::array<Byte, 4>;

  constexpr Ipv4Address() noexcept = default;
  constexpr explicit Ipv4Address(const Octets& octets) noexcept : octets_(octets) {}

  [[nodiscard]] constexpr const Octets& octets() const noexcept { return octets_; }
  /// Dotted quad.
  [[nodiscard]] std::string to_string() const;

  friend constexpr auto operator<=>(const Ipv4Address&, const Ipv4Address&) = default;

 private:
  Octets octets_{};
};

inline constexpr std::uint16_t kEtherTypeIp = 0x0800;
inline constexpr std::uint16_t kEtherTypeArp = 0x0806;
inline constexpr std::uint16_t kArpHardwareEthernet = 0x0001;
inline constexpr std::uint16_t kArpRequest = 1;
inline constexpr std::uint16_t kArpReply = 2;

/// ARP for the Ethernet/IPv4 geometry (hardware size 6, protocol size 4).
struct ArpPacket {
  static constexpr std::size_t wire_length = 28;

  std::uint16_t hardware_type = 0;
  std::uint16_t protocol_type = 0;
  Byte hardware_size = 0;
  Byte protocol_size = 0;
  std::uint16_t opcode = 0;
  MacAddress sender_mac;
  Ipv4Address sender_ip;
  MacAddress target_mac;
  Ipv4Address target_ip;

  friend bool operator==(const ArpPacket&, const ArpPacket&) = default;
};

/// "request", "reply", or "unknown (0x0003)".
std::string arp_opcode_name(std::uint16_t opcode);

/// Decodes the first 28 bytes of `payload`; anything after is pad.
/// Errors: TruncatedArp (< 28 bytes), UnsupportedArpGeometry (sizes not 6/4).
ArpPacket decode_arp(ByteView payload);

/// STP timer in 1/256 second units.
struct StpTimer {
  std::uint16_t raw = 0;

  [[nodiscard]] constexpr double seconds() const noexcept { return raw / 256.0; }
  [[nodiscard]] constexpr bool whole_seconds() const noexcept { return (raw & 0xFF) == 0; }
  /// Exact decimal seconds: "20" for raw 5120, "0.5" for raw 128.
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(const StpTimer&, const StpTimer&) = default;
};

/// Root or bridge identifier: 2-byte priority followed by a MAC address.
struct BridgeId {
  std::uint16_t priority = 0;
  MacAddress mac;

  /// "32768 / 00:03:31:34:62:c0"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BridgeId&, const BridgeId&) = default;
};

inline constexpr Byte kBpduConfiguration = 0x00;
inline constexpr Byte kTopologyChangeFlag = 0x01;
inline constexpr Byte kTopologyChangeAckFlag = 0x80;

struct StpBpdu {
  static constexpr std::size_t configuration_length = 35;

  std::uint16_t protocol_identifier = 0;
  Byte protocol_version = 0;
  Byte bpdu_type = 0;
  Byte flags = 0;
  BridgeId root;
  std::uint32_t root_path_cost = 0;
  BridgeId bridge;
  std::uint16_t port_identifier = 0;
  StpTimer message_age;
  StpTimer max_age;
  StpTimer hello_time;
  StpTimer forward_delay;

  [[nodiscard]] constexpr bool topology_change() const noexcept {
    return (flags & kTopologyChangeFlag) != 0;
  }
  [[nodiscard]] constexpr bool topology_change_ack() const noexcept {
    return (flags & kTopologyChangeAckFlag) != 0;
  }

  friend bool operator==(const StpBpdu&, const StpBpdu&) = default;
};

/// Errors: NotBpdu unless DSAP and SSAP are both 0x42; TruncatedBpdu when
/// fewer than 35 bytes are present.
StpBpdu decode_stp_bpdu(ByteView payload, const LlcHeader& llc);

/// Names the protocol carried behind a SNAP header. A zero OUI defers to
/// the EtherType registry; otherwise the organization-private table is
/// consulted, falling back to "OUI ab:cd:ef PID 0x1234".
std::string identify_snap_protocol(const SnapHeader& snap,
                                   const EtherTypeRegistry& ether_types = EtherTypeRegistry::builtin(),
                                   const SnapProtocolRegistry& snap_protocols = SnapProtocolRegistry::builtin());

/// A payload this library names but does not decode.
struct OpaquePayload {
  std::string protocol;
  ByteRange range;

  friend bool operator==(const OpaquePayload&, const OpaquePayload&) = default;
};

using DecodedPayload = std::variant<ArpPacket, StpBpdu, OpaquePayload>;

/// Picks a decoder for the dissected payload. ARP (directly or behind a
/// zero-OUI SNAP header) and LLC spanning tree BPDUs are decoded; everything
/// else, including payloads too short for their decoder, is opaque.
DecodedPayload decode_payload(ByteView frame, const DissectedFrame& dissected);

}  // namespace ethframe
