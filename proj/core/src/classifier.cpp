#include "ethframe/classifier.hpp"

namespace ethframe {

FrameKind classify(ByteView frame) noexcept {
  if (frame.size() < kHeaderLength) return FrameKind::invalid(InvalidReason::TooShort);

  const std::uint16_t t = load_be16(frame, kTypeOrLengthOffset);
  if (t >= kMinEtherType) return FrameKind::ethernet_ii();
  if (t > kMaxLengthField) return FrameKind::invalid(InvalidReason::TypeLengthGap);

  const std::size_t available = frame.size() - kHeaderLength;
  if (t > available) return FrameKind::invalid(InvalidReason::LengthExceedsFrame);

  const Byte* data = frame.data() + kHeaderLength;
  if (t >= 2 && data[0] == kRawIpxChecksumByte && data[1] == kRawIpxChecksumByte) {
    return FrameKind::novell_raw();
  }
  if (t < kLlcHeaderLength) return FrameKind::invalid(InvalidReason::TruncatedLlc);

  const LlcHeader llc{data[0], data[1], data[2]};
  if (llc.is_snap_signature()) {
    if (t >= kLlcHeaderLength + kSnapHeaderLength) return FrameKind::snap();
    return FrameKind::invalid(InvalidReason::TruncatedSnap);
  }
  return FrameKind::llc();
}

}  // namespace ethframe
