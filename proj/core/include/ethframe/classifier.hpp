#pragma once

#include "ethframe/bytes.hpp"
#include "ethframe/frame_model.hpp"

namespace ethframe {

/// Maps raw link-layer bytes to a frame format. Total and pure: any byte
/// sequence (including empty) yields exactly one verdict.
///
/// With T the big-endian 16-bit value at offset 12, rules apply in order:
///   1. fewer than 14 bytes                      -> Invalid(TooShort)
///   2. T >= 0x0600                              -> EthernetII
///   3. 1501 <= T <= 1535                        -> Invalid(TypeLengthGap)
///   4. T exceeds the bytes after the field      -> Invalid(LengthExceedsFrame)
///   5. data starts FF FF (raw IPX checksum)     -> NovellRaw
///   6. T < 3, no room for DSAP/SSAP/CTRL        -> Invalid(TruncatedLlc)
///   7. LLC is AA AA 03: T >= 8                  -> Ieee8023Snap
///                       otherwise               -> Invalid(TruncatedSnap)
///   8. anything else                            -> Ieee8023Llc
///
/// Rules 5-7 look only inside the T bytes the length field declares, never
/// into the pad beyond them.
[[nodiscard]] FrameKind classify(ByteView frame) noexcept;

[[nodiscard]] inline FrameKind classify(const RawFrame& frame) noexcept {
  return classify(frame.bytes());
}

}  // namespace ethframe
