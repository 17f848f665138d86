#pragma once

#include <cstdint>

#include "ethframe/bytes.hpp"
#include "ethframe/frame_model.hpp"
#include "ethframe/mac_address.hpp"

namespace ethframe {

// Encoders for the four frame formats. Every output is padded with zero
// bytes to the 60-byte minimum, so it is length-conformant by construction.
// Precondition violations throw ethframe::Error rather than being repaired.

/// Errors: NotAnEtherType (ether_type < 0x0600), PayloadTooLarge (> 1500).
RawFrame build_ethernet_ii(const MacAddress& dst, const MacAddress& src, std::uint16_t ether_type,
                           ByteView payload);

/// Length field = 3 + payload size.
/// Errors: PayloadTooLarge (> 1497); AmbiguousHeader for AA/AA/03 (use
/// build_8023_snap) or DSAP/SSAP FF/FF (raw IPX pattern).
RawFrame build_8023_llc(const MacAddress& dst, const MacAddress& src, const LlcHeader& llc,
                        ByteView payload);

/// Emits AA AA 03, then OUI and PID. Length field = 8 + payload size.
/// Errors: PayloadTooLarge (> 1492).
RawFrame build_8023_snap(const MacAddress& dst, const MacAddress& src, const Oui& oui,
                         std::uint16_t pid, ByteView payload);

/// Length field = IPX packet size.
/// Errors: NotRawIpx (packet does not start FF FF), PayloadTooLarge (> 1500).
RawFrame build_novell_raw(const MacAddress& dst, const MacAddress& src, ByteView ipx_packet);

/// dst | src | type_or_length | body, with no validation and no padding.
/// For constructing malformed frames in tests.
RawFrame build_raw_unchecked(const MacAddress& dst, const MacAddress& src,
                             std::uint16_t type_or_length, ByteView body);

}  // namespace ethframe
