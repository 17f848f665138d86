#include "ethframe/trace_renderer.hpp"

#include <fmt/format.h>

#include "ethframe/dissector.hpp"
#include "ethframe/registry.hpp"

namespace ethframe {

namespace {

class TraceWriter {
 public:
  void block(std::string_view title) { fmt::format_to(std::back_inserter(out_), "{}\n", title); }

  template <typename... Args>
  void field(int depth, fmt::format_string<Args...> format, Args&&... args) {
    out_.append(static_cast<std::size_t>(depth) * 2, ' ');
    fmt::format_to(std::back_inserter(out_), format, std::forward<Args>(args)...);
    out_.push_back('\n');
  }

  void hex_dump(int depth, ByteView bytes) {
    for (std::size_t row = 0; row < bytes.size(); row += 16) {
      std::string line = fmt::format("{:04x} ", row);
      for (std::size_t i = row; i < std::min(row + 16, bytes.size()); ++i) {
        fmt::format_to(std::back_inserter(line), " {:02x}", bytes[i]);
      }
      field(depth, "{}", line);
    }
  }

  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

/// Renders the masked bits of an octet as "000. 00..".
std::string bit_pattern(Byte value, Byte mask) {
  std::string out;
  for (int bit = 7; bit >= 0; --bit) {
    const Byte m = static_cast<Byte>(1u << bit);
    out.push_back((mask & m) == 0 ? '.' : ((value & m) != 0 ? '1' : '0'));
    if (bit == 4) out.push_back(' ');
  }
  return out;
}

std::string mac_field(const MacAddress& mac) {
  if (mac.is_broadcast()) return mac.to_string() + " (Broadcast)";
  return mac.to_string();
}

std::string ip_field(const Ipv4Address& ip) {
  // No name resolution: the resolved name is the address itself.
  return fmt::format("{0} ({0})", ip.to_string());
}

struct UnnumberedFunction {
  Byte code;
  std::string_view abbrev;
  std::string_view name;
};

constexpr UnnumberedFunction kUnnumberedFunctions[] = {
    {0x03, "UI", "Unnumbered Information"},
    {0x0F, "DM", "Disconnected Mode"},
    {0x43, "DISC", "Disconnect"},
    {0x63, "UA", "Unnumbered Acknowledge"},
    {0x6F, "SABME", "Set Asynchronous Balanced Mode Extended"},
    {0x87, "FRMR", "Frame Reject"},
    {0xAF, "XID", "Exchange Identification"},
    {0xE3, "TEST", "Test"},
};

void render_control(TraceWriter& w, Byte control) {
  if ((control & 0x01) == 0) {
    w.field(1, "Control field: I, N(S)={} (0x{:02x})", control >> 1, control);
    return;
  }
  if ((control & 0x03) == 0x01) {
    constexpr std::string_view supervisory[] = {"RR", "RNR", "REJ", "SREJ"};
    w.field(1, "Control field: S, func={} (0x{:02x})", supervisory[(control >> 2) & 0x03],
            control);
    return;
  }
  const Byte code = static_cast<Byte>(control & 0xEF);
  std::string_view abbrev = "unknown";
  std::string_view name = "Unknown";
  for (const auto& fn : kUnnumberedFunctions) {
    if (fn.code == code) {
      abbrev = fn.abbrev;
      name = fn.name;
    }
  }
  w.field(1, "Control field: U, func={} (0x{:02x})", abbrev, control);
  w.field(2, "{} = Command: {} (0x{:02x})", bit_pattern(control, 0xEC), name, control & 0xEC);
  if ((control & 0x10) != 0) w.field(2, "{} = Poll/Final: Set", bit_pattern(control, 0x10));
  w.field(2, "{} = Frame type: Unnumbered frame (0x03)", bit_pattern(control, 0x03));
}

void render_llc(TraceWriter& w, const DissectedFrame& d) {
  const LlcHeader& llc = *d.llc;
  const LsapRegistry& saps = LsapRegistry::builtin();
  w.block("Logical-Link Control");
  w.field(1, "DSAP: {} (0x{:02x})", saps.name(llc.dsap), llc.dsap);
  w.field(1, "IG Bit: {}", llc.ig_bit() ? "Group" : "Individual");
  w.field(1, "SSAP: {} (0x{:02x})", saps.name(llc.ssap), llc.ssap);
  w.field(1, "CR Bit: {}", llc.cr_bit() ? "Response" : "Command");
  render_control(w, llc.control);
  if (d.snap) {
    const SnapHeader& snap = *d.snap;
    w.field(1, "Organization Code: {} (0x{:02x}{:02x}{:02x})",
            SnapProtocolRegistry::builtin().organization_name(snap.oui), snap.oui[0], snap.oui[1],
            snap.oui[2]);
    w.field(1, "PID: {} (0x{:04x})", identify_snap_protocol(snap), snap.pid);
  }
}

void render_extra(TraceWriter& w, ByteView frame, ByteRange payload, std::size_t decoded) {
  if (payload.length > decoded) {
    w.field(1, "Extra data: {}",
            to_hex(slice(frame, {payload.offset + decoded, payload.length - decoded})));
  }
}

void render_arp(TraceWriter& w, const ArpPacket& arp) {
  if (arp.opcode == kArpRequest || arp.opcode == kArpReply) {
    w.block(fmt::format("Address Resolution Protocol ({})", arp_opcode_name(arp.opcode)));
  } else {
    w.block("Address Resolution Protocol");
  }
  const std::string hardware =
      arp.hardware_type == kArpHardwareEthernet ? "Ethernet" : "unknown";
  w.field(1, "Hardware type: {} (0x{:04x})", hardware, arp.hardware_type);
  w.field(1, "Protocol type: {} (0x{:04x})", EtherTypeRegistry::builtin().name(arp.protocol_type),
          arp.protocol_type);
  w.field(1, "Hardware size: {}", arp.hardware_size);
  w.field(1, "Protocol size: {}", arp.protocol_size);
  if (arp.opcode == kArpRequest || arp.opcode == kArpReply) {
    w.field(1, "Opcode: {} (0x{:04x})", arp_opcode_name(arp.opcode), arp.opcode);
  } else {
    w.field(1, "Opcode: {}", arp_opcode_name(arp.opcode));
  }
  w.field(1, "Sender MAC address: {}", arp.sender_mac.to_string());
  w.field(1, "Sender IP address: {}", ip_field(arp.sender_ip));
  w.field(1, "Target MAC address: {}", arp.target_mac.to_string());
  w.field(1, "Target IP address: {}", ip_field(arp.target_ip));
}

std::string bpdu_version_name(Byte version) {
  switch (version) {
    case 0: return "Spanning Tree";
    case 2: return "Rapid Spanning Tree";
    case 3: return "Multiple Spanning Tree";
    default: return "unknown";
  }
}

std::string bpdu_type_name(Byte type) {
  switch (type) {
    case 0x00: return "Configuration";
    case 0x02: return "Rapid/Multiple Spanning Tree";
    case 0x80: return "Topology Change Notification";
    default: return "unknown";
  }
}

void render_bpdu(TraceWriter& w, const StpBpdu& bpdu) {
  w.block("Spanning Tree Protocol");
  w.field(1, "Protocol Identifier: {} (0x{:04x})",
          bpdu.protocol_identifier == 0 ? "Spanning Tree Protocol" : "unknown",
          bpdu.protocol_identifier);
  w.field(1, "Protocol Version Identifier: {} ({})", bpdu_version_name(bpdu.protocol_version),
          bpdu.protocol_version);
  w.field(1, "BPDU Type: {} (0x{:02x})", bpdu_type_name(bpdu.bpdu_type), bpdu.bpdu_type);
  w.field(1, "BPDU flags: 0x{:02x}", bpdu.flags);
  w.field(2, "{} = Topology Change Acknowledgment: {}",
          bit_pattern(bpdu.flags, kTopologyChangeAckFlag),
          bpdu.topology_change_ack() ? "Yes" : "No");
  w.field(2, "{} = Topology Change: {}", bit_pattern(bpdu.flags, kTopologyChangeFlag),
          bpdu.topology_change() ? "Yes" : "No");
  w.field(1, "Root Identifier: {}", bpdu.root.to_string());
  w.field(1, "Root Path Cost: {}", bpdu.root_path_cost);
  w.field(1, "Bridge Identifier: {}", bpdu.bridge.to_string());
  w.field(1, "Port identifier: 0x{:04x}", bpdu.port_identifier);
  w.field(1, "Message Age: {}", bpdu.message_age.to_string());
  w.field(1, "Max Age: {}", bpdu.max_age.to_string());
  w.field(1, "Hello Time: {}", bpdu.hello_time.to_string());
  w.field(1, "Forward Delay: {}", bpdu.forward_delay.to_string());
}

void render_opaque(TraceWriter& w, ByteView frame, const DissectedFrame& d,
                   const OpaquePayload& opaque) {
  const ByteView bytes = slice(frame, opaque.range);
  w.block(fmt::format("Data ({} bytes)", bytes.size()));
  w.field(1, "Protocol: {}", opaque.protocol);
  if (d.kind.is(FrameFormat::NovellRaw)) {
    w.field(1, "Checksum: 0x{:04x} (unused)", load_be16(bytes, 0));
  }
  w.hex_dump(1, bytes);
}

std::string_view link_title(const DissectedFrame& d) {
  switch (d.kind.format()) {
    case FrameFormat::EthernetII: return "Ethernet II";
    case FrameFormat::Ieee8023Llc:
    case FrameFormat::Ieee8023Snap: return "IEEE 802.3 Ethernet";
    case FrameFormat::NovellRaw: return "Novell raw IEEE 802.3";
    case FrameFormat::Invalid: break;
  }
  return "Malformed frame";
}

/// Ethernet II pad is only known once the upper layer reports its length.
std::optional<ByteRange> trailer_of(const DissectedFrame& d, const DecodedPayload& payload) {
  if (!d.kind.is(FrameFormat::EthernetII)) return d.trailer;
  if (!std::holds_alternative<ArpPacket>(payload)) return d.trailer;
  const auto pad = decode_trailer(d, ArpPacket::wire_length);
  if (!pad) return d.trailer;
  return ByteRange{pad->offset, d.frame_length - pad->offset};
}

}  // namespace

std::string render_trace(ByteView frame, const DissectedFrame& d, const DecodedPayload& payload) {
  TraceWriter w;
  w.block(link_title(d));

  if (frame.size() < kHeaderLength) {
    w.field(1, "Verdict: {}", d.kind.name());
    if (!frame.empty()) w.field(1, "Data: {}", to_hex(frame));
    return w.take();
  }

  w.field(1, "Destination: {}", mac_field(d.dst));
  w.field(1, "Source: {}", mac_field(d.src));
  if (d.type_or_length >= kMinEtherType) {
    w.field(1, "Type: {} (0x{:04x})", EtherTypeRegistry::builtin().name(d.type_or_length),
            d.type_or_length);
  } else {
    w.field(1, "Length: {}", d.type_or_length);
  }

  if (!d.kind.is_valid()) {
    w.field(1, "Verdict: {}", d.kind.name());
    if (frame.size() > kHeaderLength) w.field(1, "Data: {}", to_hex(frame.subspan(kHeaderLength)));
    return w.take();
  }

  if (const auto trailer = trailer_of(d, payload)) {
    w.field(1, "Trailer: {}", to_hex(slice(frame, *trailer)));
  }
  if (d.llc) render_llc(w, d);

  // Bytes of the link-layer payload beyond what a decoder consumed belong to
  // the trailer for Ethernet II and are shown as extra data otherwise.
  const bool pad_in_trailer = d.kind.is(FrameFormat::EthernetII);
  std::visit(
      [&](const auto& decoded) {
        using T = std::decay_t<decltype(decoded)>;
        if constexpr (std::is_same_v<T, ArpPacket>) {
          render_arp(w, decoded);
          if (!pad_in_trailer) render_extra(w, frame, d.payload, ArpPacket::wire_length);
        } else if constexpr (std::is_same_v<T, StpBpdu>) {
          render_bpdu(w, decoded);
          render_extra(w, frame, d.payload, StpBpdu::configuration_length);
        } else {
          render_opaque(w, frame, d, decoded);
        }
      },
      payload);
  return w.take();
}

std::string render_trace(ByteView frame) {
  const DissectedFrame d = dissect(frame);
  return render_trace(frame, d, decode_payload(frame, d));
}

}  // namespace ethframe
