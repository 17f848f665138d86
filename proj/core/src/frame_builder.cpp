#include "ethframe/frame_builder.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "ethframe/error.hpp"

namespace ethframe {

namespace {

Bytes header(const MacAddress& dst, const MacAddress& src, std::uint16_t type_or_length,
             std::size_t body_size) {
  Bytes out;
  out.reserve(std::max(kMinFrameLength, kHeaderLength + body_size));
  out.insert(out.end(), dst.octets().begin(), dst.octets().end());
  out.insert(out.end(), src.octets().begin(), src.octets().end());
  append_be16(out, type_or_length);
  return out;
}

RawFrame finish(Bytes bytes) {
  if (bytes.size() < kMinFrameLength) bytes.resize(kMinFrameLength, 0x00);
  return RawFrame(std::move(bytes));
}

void check_size(ByteView payload, std::size_t cap) {
  if (payload.size() > cap) {
    throw Error(Errc::PayloadTooLarge, fmt::format("{} bytes exceeds {}", payload.size(), cap));
  }
}

}  // namespace

RawFrame build_ethernet_ii(const MacAddress& dst, const MacAddress& src, std::uint16_t ether_type,
                           ByteView payload) {
  if (ether_type < kMinEtherType) {
    throw Error(Errc::NotAnEtherType, fmt::format("0x{:04x} is below 0x0600", ether_type));
  }
  check_size(payload, kMaxEthernetPayload);
  Bytes out = header(dst, src, ether_type, payload.size());
  out.insert(out.end(), payload.begin(), payload.end());
  return finish(std::move(out));
}

RawFrame build_8023_llc(const MacAddress& dst, const MacAddress& src, const LlcHeader& llc,
                        ByteView payload) {
  check_size(payload, kMaxLlcPayload);
  if (llc.is_snap_signature()) {
    throw Error(Errc::AmbiguousHeader, "AA/AA/03 is the SNAP signature");
  }
  if (llc.is_raw_ipx_pattern()) {
    throw Error(Errc::AmbiguousHeader, "DSAP/SSAP FF/FF is the raw IPX pattern");
  }
  const std::size_t body = kLlcHeaderLength + payload.size();
  Bytes out = header(dst, src, static_cast<std::uint16_t>(body), body);
  out.push_back(llc.dsap);
  out.push_back(llc.ssap);
  out.push_back(llc.control);
  out.insert(out.end(), payload.begin(), payload.end());
  return finish(std::move(out));
}

RawFrame build_8023_snap(const MacAddress& dst, const MacAddress& src, const Oui& oui,
                         std::uint16_t pid, ByteView payload) {
  check_size(payload, kMaxSnapPayload);
  const std::size_t body = kLlcHeaderLength + kSnapHeaderLength + payload.size();
  Bytes out = header(dst, src, static_cast<std::uint16_t>(body), body);
  out.push_back(kSnapSap);
  out.push_back(kSnapSap);
  out.push_back(kUnnumberedInformation);
  out.insert(out.end(), oui.begin(), oui.end());
  append_be16(out, pid);
  out.insert(out.end(), payload.begin(), payload.end());
  return finish(std::move(out));
}

RawFrame build_novell_raw(const MacAddress& dst, const MacAddress& src, ByteView ipx_packet) {
  if (ipx_packet.size() < 2 || ipx_packet[0] != kRawIpxChecksumByte ||
      ipx_packet[1] != kRawIpxChecksumByte) {
    throw Error(Errc::NotRawIpx, "IPX checksum word must be FF FF");
  }
  check_size(ipx_packet, kMaxNovellPayload);
  Bytes out = header(dst, src, static_cast<std::uint16_t>(ipx_packet.size()), ipx_packet.size());
  out.insert(out.end(), ipx_packet.begin(), ipx_packet.end());
  return finish(std::move(out));
}

RawFrame build_raw_unchecked(const MacAddress& dst, const MacAddress& src,
                             std::uint16_t type_or_length, ByteView body) {
  Bytes out = header(dst, src, type_or_length, body.size());
  out.insert(out.end(), body.begin(), body.end());
  return RawFrame(std::move(out));
}

}  // namespace ethframe
