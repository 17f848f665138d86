#pragma once

#include <string>

#include "ethframe/bytes.hpp"
#include "ethframe/frame_model.hpp"
#include "ethframe/payload_decoders.hpp"

namespace ethframe {

/// Renders a sniffer-style text trace: one block per layer, block titles at
/// column 0 and `Field: value` lines indented two spaces per nesting level.
///
///   Ethernet II
///     Destination: ff:ff:ff:ff:ff:ff (Broadcast)
///     Source: 00:b0:d0:49:2a:b9
///     Type: ARP (0x0806)
///     Trailer: 000000000000000000000000000000000000
///   Address Resolution Protocol (request)
///     ...
///
/// Every byte of `frame` appears in the output, either as a decoded field,
/// a hex dump of an opaque payload, or trailer hex.
std::string render_trace(ByteView frame, const DissectedFrame& dissected,
                         const DecodedPayload& payload);

/// dissect + decode_payload + render.
std::string render_trace(ByteView frame);

}  // namespace ethframe
