#include "ethframe/dissector.hpp"

#include <algorithm>

#include "ethframe/classifier.hpp"
#include "ethframe/error.hpp"

namespace ethframe {

namespace {

std::optional<ByteRange> tail_after(std::size_t end, std::size_t frame_length) {
  if (end >= frame_length) return std::nullopt;
  return ByteRange{end, frame_length - end};
}

}  // namespace

DissectedFrame dissect(ByteView frame) noexcept {
  DissectedFrame out;
  out.frame_length = frame.size();
  out.length_conformant = is_length_conformant(frame.size());
  out.kind = classify(frame);

  if (frame.size() < kHeaderLength) {
    out.payload = ByteRange{0, 0};
    return out;
  }

  out.dst = MacAddress::from_bytes(frame.first(kAddressLength));
  out.src = MacAddress::from_bytes(frame.subspan(kAddressLength, kAddressLength));
  out.type_or_length = load_be16(frame, kTypeOrLengthOffset);
  out.payload = ByteRange{kHeaderLength, 0};

  const std::size_t t = out.type_or_length;
  const std::size_t declared_end = kHeaderLength + t;

  switch (out.kind.format()) {
    case FrameFormat::EthernetII: {
      const std::size_t data = frame.size() - kHeaderLength;
      out.payload = ByteRange{kHeaderLength, std::min(data, kMaxEthernetPayload)};
      out.trailer = tail_after(out.payload.end(), frame.size());
      break;
    }
    case FrameFormat::Ieee8023Llc:
      out.llc = LlcHeader{frame[14], frame[15], frame[16]};
      out.payload = ByteRange{kHeaderLength + kLlcHeaderLength, t - kLlcHeaderLength};
      out.trailer = tail_after(declared_end, frame.size());
      break;
    case FrameFormat::Ieee8023Snap:
      out.llc = LlcHeader{frame[14], frame[15], frame[16]};
      out.snap = SnapHeader{Oui{frame[17], frame[18], frame[19]}, load_be16(frame, 20)};
      out.payload = ByteRange{kHeaderLength + kLlcHeaderLength + kSnapHeaderLength,
                              t - kLlcHeaderLength - kSnapHeaderLength};
      out.trailer = tail_after(declared_end, frame.size());
      break;
    case FrameFormat::NovellRaw:
      out.payload = ByteRange{kHeaderLength, t};
      out.trailer = tail_after(declared_end, frame.size());
      break;
    case FrameFormat::Invalid:
      break;
  }
  return out;
}

std::optional<ByteRange> decode_trailer(const DissectedFrame& frame,
                                        std::size_t upper_layer_length) {
  if (!frame.kind.is(FrameFormat::EthernetII)) {
    throw Error(Errc::ContractViolation, "decode_trailer requires an Ethernet II frame");
  }
  if (upper_layer_length > frame.payload.length) {
    throw Error(Errc::ContractViolation, "upper layer length exceeds Ethernet II payload");
  }
  const std::size_t pad = frame.payload.length - upper_layer_length;
  if (pad == 0) return std::nullopt;
  return ByteRange{frame.payload.offset + upper_layer_length, pad};
}

}  // namespace ethframe
