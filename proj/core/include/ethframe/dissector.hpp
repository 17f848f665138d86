#pragma once

#include <cstddef>
#include <optional>

#include "ethframe/bytes.hpp"
#include "ethframe/frame_model.hpp"

namespace ethframe {

/// Classifies `frame` and splits it into header fields, payload and trailer
/// spans. Never throws; structural problems are reported through `kind`, in
/// which case payload is empty and llc/snap are absent.
///
/// Ethernet II has no length field, so the link layer cannot tell data from
/// pad: the payload runs to the end of the frame (capped at 1500 bytes, any
/// excess of an oversized frame becomes the trailer). Use decode_trailer once
/// the upper layer knows its own length.
[[nodiscard]] DissectedFrame dissect(ByteView frame) noexcept;

[[nodiscard]] inline DissectedFrame dissect(const RawFrame& frame) noexcept {
  return dissect(frame.bytes());
}

/// Splits an Ethernet II payload into `upper_layer_length` bytes of upper
/// layer data followed by pad. Returns the pad span, or nullopt when the
/// payload is consumed exactly. Throws Error(ContractViolation) if the frame
/// is not Ethernet II or `upper_layer_length` exceeds the payload.
[[nodiscard]] std::optional<ByteRange> decode_trailer(const DissectedFrame& frame,
                                                      std::size_t upper_layer_length);

}  // namespace ethframe
