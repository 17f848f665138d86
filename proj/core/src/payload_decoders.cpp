#include "ethframe/payload_decoders.hpp"

#include <fmt/format.h>

#include "ethframe/error.hpp"

namespace ethframe {

std::string Ipv4Address::to_string() const {
  return fmt::format("{}.{}.{}.{}", octets_[0], octets_[1], octets_[2], octets_[3]);
}

namespace {

Ipv4Address read_ipv4(ByteView b, std::size_t off) {
  return Ipv4Address(Ipv4Address::Octets{b[off], b[off + 1], b[off + 2], b[off + 3]});
}

MacAddress read_mac(ByteView b, std::size_t off) {
  return MacAddress::from_bytes(b.subspan(off, MacAddress::size));
}

BridgeId read_bridge_id(ByteView b, std::size_t off) {
  return BridgeId{load_be16(b, off), read_mac(b, off + 2)};
}

}  // namespace

std::string arp_opcode_name(std::uint16_t opcode) {
  switch (opcode) {
    case kArpRequest: return "request";
    case kArpReply: return "reply";
    default: return fmt::format("unknown (0x{:04x})", opcode);
  }
}

ArpPacket decode_arp(ByteView payload) {
  if (payload.size() < ArpPacket::wire_length) {
    throw Error(Errc::TruncatedArp, fmt::format("{} bytes, need 28", payload.size()));
  }
  ArpPacket arp;
  arp.hardware_type = load_be16(payload, 0);
  arp.protocol_type = load_be16(payload, 2);
  arp.hardware_size = payload[4];
  arp.protocol_size = payload[5];
  if (arp.hardware_size != MacAddress::size || arp.protocol_size != 4) {
    throw Error(Errc::UnsupportedArpGeometry,
                fmt::format("hardware size {}, protocol size {}", arp.hardware_size,
                            arp.protocol_size));
  }
  arp.opcode = load_be16(payload, 6);
  arp.sender_mac = read_mac(payload, 8);
  arp.sender_ip = read_ipv4(payload, 14);
  arp.target_mac = read_mac(payload, 18);
  arp.target_ip = read_ipv4(payload, 24);
  return arp;
}

std::string StpTimer::to_string() const {
  const unsigned whole = raw >> 8;
  unsigned frac = raw & 0xFFu;
  if (frac == 0) return fmt::format("{}", whole);
  // frac/256 has at most 8 decimal places: frac * 5^8 / 10^8.
  std::string digits = fmt::format("{:08d}", frac * 390625u);
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return fmt::format("{}.{}", whole, digits);
}

std::string BridgeId::to_string() const {
  return fmt::format("{} / {}", priority, mac.to_string());
}

StpBpdu decode_stp_bpdu(ByteView payload, const LlcHeader& llc) {
  if (llc.dsap != kStpSap || llc.ssap != kStpSap) {
    throw Error(Errc::NotBpdu, fmt::format("DSAP 0x{:02x} SSAP 0x{:02x}", llc.dsap, llc.ssap));
  }
  if (payload.size() < StpBpdu::configuration_length) {
    throw Error(Errc::TruncatedBpdu, fmt::format("{} bytes, need 35", payload.size()));
  }
  StpBpdu bpdu;
  bpdu.protocol_identifier = load_be16(payload, 0);
  bpdu.protocol_version = payload[2];
  bpdu.bpdu_type = payload[3];
  bpdu.flags = payload[4];
  bpdu.root = read_bridge_id(payload, 5);
  bpdu.root_path_cost = load_be32(payload, 13);
  bpdu.bridge = read_bridge_id(payload, 17);
  bpdu.port_identifier = load_be16(payload, 25);
  bpdu.message_age = StpTimer{load_be16(payload, 27)};
  bpdu.max_age = StpTimer{load_be16(payload, 29)};
  bpdu.hello_time = StpTimer{load_be16(payload, 31)};
  bpdu.forward_delay = StpTimer{load_be16(payload, 33)};
  return bpdu;
}

std::string identify_snap_protocol(const SnapHeader& snap, const EtherTypeRegistry& ether_types,
                                   const SnapProtocolRegistry& snap_protocols) {
  if (auto ether_type = snap.ether_type()) return ether_types.name(*ether_type);
  if (auto name = snap_protocols.find_protocol(snap.oui, snap.pid)) return std::string(*name);
  return fmt::format("OUI {} PID 0x{:04x}", format_oui(snap.oui), snap.pid);
}

namespace {

bool looks_like_arp(ByteView payload) {
  return payload.size() >= ArpPacket::wire_length && payload[4] == MacAddress::size &&
         payload[5] == 4;
}

}  // namespace

DecodedPayload decode_payload(ByteView frame, const DissectedFrame& dissected) {
  const ByteView payload = slice(frame, dissected.payload);
  switch (dissected.kind.format()) {
    case FrameFormat::EthernetII:
      if (dissected.type_or_length == kEtherTypeArp && looks_like_arp(payload)) {
        return decode_arp(payload);
      }
      return OpaquePayload{EtherTypeRegistry::builtin().name(dissected.type_or_length),
                           dissected.payload};
    case FrameFormat::Ieee8023Llc: {
      const LlcHeader& llc = *dissected.llc;
      if (llc.dsap == kStpSap && llc.ssap == kStpSap &&
          payload.size() >= StpBpdu::configuration_length) {
        return decode_stp_bpdu(payload, llc);
      }
      return OpaquePayload{LsapRegistry::builtin().name(llc.dsap), dissected.payload};
    }
    case FrameFormat::Ieee8023Snap:
      if (dissected.snap->ether_type() == kEtherTypeArp && looks_like_arp(payload)) {
        return decode_arp(payload);
      }
      return OpaquePayload{identify_snap_protocol(*dissected.snap), dissected.payload};
    case FrameFormat::NovellRaw:
      return OpaquePayload{"IPX", dissected.payload};
    case FrameFormat::Invalid:
      break;
  }
  return OpaquePayload{"", dissected.payload};
}

}  // namespace ethframe
