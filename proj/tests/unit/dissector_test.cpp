#include <gtest/gtest.h>

#include "ethframe/dissector.hpp"
#include "ethframe/error.hpp"
#include "ethframe/frame_builder.hpp"
#include "reference_frames.hpp"
#include "test_random.hpp"

namespace ethframe {
namespace {

TEST(Dissect, SpanningTreeFrame) {
  const Bytes f = testing::stp_bpdu_frame();
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::llc());
  EXPECT_EQ(d.dst.to_string(), "01:80:c2:00:00:00");
  EXPECT_EQ(d.src.to_string(), "00:03:31:34:62:c2");
  EXPECT_EQ(d.type_or_length, 38);
  ASSERT_TRUE(d.llc);
  EXPECT_EQ(*d.llc, (LlcHeader{0x42, 0x42, 0x03}));
  EXPECT_FALSE(d.snap);
  EXPECT_EQ(d.payload, (ByteRange{17, 35}));
  ASSERT_TRUE(d.trailer);
  EXPECT_EQ(*d.trailer, (ByteRange{52, 8}));
  EXPECT_EQ(to_hex(slice(f, *d.trailer)), "0000000000000000");
  EXPECT_TRUE(d.length_conformant);
  EXPECT_EQ(d.frame_length, 60u);
}

TEST(Dissect, CdpOverSnapFrame) {
  const Bytes f = testing::cdp_snap_frame();
  ASSERT_EQ(f.size(), 363u);
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::snap());
  EXPECT_EQ(d.type_or_length, 349);
  ASSERT_TRUE(d.llc);
  EXPECT_EQ(*d.llc, (LlcHeader{0xAA, 0xAA, 0x03}));
  ASSERT_TRUE(d.snap);
  EXPECT_EQ(*d.snap, (SnapHeader{kCiscoOui, 0x2000}));
  EXPECT_EQ(d.payload, (ByteRange{22, 341}));
  EXPECT_FALSE(d.trailer);
}

TEST(Dissect, ArpFrameLeavesPadToUpperLayer) {
  const Bytes f = testing::arp_request_frame();
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::ethernet_ii());
  EXPECT_TRUE(d.dst.is_broadcast());
  EXPECT_EQ(d.type_or_length, 0x0806);
  EXPECT_EQ(d.payload, (ByteRange{14, 46}));
  EXPECT_FALSE(d.trailer);
  EXPECT_FALSE(d.llc);

  // 14 + 28 = 42, 60 - 42 = 18.
  EXPECT_EQ(decode_trailer(d, 28), (ByteRange{42, 18}));
}

TEST(DecodeTrailer, Cases) {
  const DissectedFrame d = dissect(testing::arp_request_frame());
  EXPECT_EQ(decode_trailer(d, 46), std::nullopt);
  EXPECT_EQ(decode_trailer(d, 0), (ByteRange{14, 46}));
}

TEST(DecodeTrailer, ContractViolations) {
  const DissectedFrame arp = dissect(testing::arp_request_frame());
  try {
    (void)decode_trailer(arp, 47);
    FAIL() << "expected ContractViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContractViolation);
  }
  const DissectedFrame stp = dissect(testing::stp_bpdu_frame());
  EXPECT_THROW((void)decode_trailer(stp, 0), Error);
}

TEST(Dissect, InvalidFramesHaveNoPayload) {
  Bytes gap = testing::arp_request_frame();
  gap[12] = 0x05;
  gap[13] = 0xDD;
  const DissectedFrame d = dissect(gap);
  EXPECT_EQ(d.kind, FrameKind::invalid(InvalidReason::TypeLengthGap));
  EXPECT_EQ(d.type_or_length, 1501);
  EXPECT_TRUE(d.dst.is_broadcast());
  EXPECT_TRUE(d.payload.empty());
  EXPECT_FALSE(d.llc);
  EXPECT_FALSE(d.snap);
  EXPECT_FALSE(d.trailer);

  const DissectedFrame tiny = dissect(Bytes{1, 2, 3});
  EXPECT_EQ(tiny.kind, FrameKind::invalid(InvalidReason::TooShort));
  EXPECT_EQ(tiny.payload, (ByteRange{0, 0}));
  EXPECT_EQ(tiny.frame_length, 3u);
  EXPECT_FALSE(tiny.length_conformant);
}

TEST(Dissect, UndersizedFrameStillClassified) {
  // 14 + 3 + 5 = 22 bytes with no pad: valid LLC, not length-conformant.
  const RawFrame f = build_raw_unchecked(MacAddress{}, MacAddress{}, 8,
                                         Bytes{0x06, 0x06, 0x03, 1, 2, 3, 4, 5});
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::llc());
  EXPECT_EQ(d.payload, (ByteRange{17, 5}));
  EXPECT_FALSE(d.trailer);
  EXPECT_FALSE(d.length_conformant);
}

TEST(Dissect, RawIpxPayloadStartsAtChecksum) {
  Bytes ipx(30, 0x11);
  ipx[0] = 0xFF;
  ipx[1] = 0xFF;
  const RawFrame f = build_novell_raw(MacAddress::broadcast(), MacAddress{}, ipx);
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::novell_raw());
  EXPECT_EQ(d.payload, (ByteRange{14, 30}));
  EXPECT_EQ(d.trailer, (ByteRange{44, 16}));
  EXPECT_EQ(f.bytes()[14], 0xFF);
}

TEST(Dissect, OversizedEthernetIICapsPayload) {
  Bytes f(1600, 0x5A);
  f[12] = 0x08;
  f[13] = 0x00;
  const DissectedFrame d = dissect(f);
  EXPECT_EQ(d.kind, FrameKind::ethernet_ii());
  EXPECT_EQ(d.payload, (ByteRange{14, 1500}));
  EXPECT_EQ(d.trailer, (ByteRange{1514, 86}));
  EXPECT_FALSE(d.length_conformant);
}

std::size_t header_bytes(const DissectedFrame& d) {
  std::size_t n = kHeaderLength;
  if (d.llc) n += kLlcHeaderLength;
  if (d.snap) n += kSnapHeaderLength;
  return n;
}

TEST(Dissect, SpanSafetyAndConservationOnRandomInput) {
  auto rng = testing::seeded_rng(3);
  for (int i = 0; i < 100000; ++i) {
    const std::size_t n = testing::random_size(rng, 0, 2000);
    Bytes f = testing::random_bytes(rng, n);
    if (n >= 17 && i % 2 == 0) {
      // Plausible length fields so the 802.3 paths get exercised.
      const std::size_t t = testing::random_size(rng, 0, std::min<std::size_t>(n - 14, 1500));
      f[12] = static_cast<Byte>(t >> 8);
      f[13] = static_cast<Byte>(t & 0xFF);
      if (i % 6 == 0) f[14] = f[15] = 0xFF;
      if (i % 6 == 2) f[14] = f[15] = 0xAA, f[16] = 0x03;
    }
    const DissectedFrame d = dissect(f);
    ASSERT_EQ(d.frame_length, n);
    ASSERT_TRUE(d.payload.within(n));
    if (d.trailer) {
      ASSERT_TRUE(d.trailer->within(n));
      ASSERT_FALSE(d.trailer->empty());
      ASSERT_LE(d.payload.end(), d.trailer->offset);
    }
    const FrameFormat fmt = d.kind.format();
    ASSERT_EQ(d.llc.has_value(), fmt == FrameFormat::Ieee8023Llc || fmt == FrameFormat::Ieee8023Snap);
    ASSERT_EQ(d.snap.has_value(), fmt == FrameFormat::Ieee8023Snap);
    if (fmt == FrameFormat::EthernetII) ASSERT_LE(d.payload.length, kMaxEthernetPayload);
    if (fmt == FrameFormat::Ieee8023Snap) ASSERT_LE(d.payload.length, kMaxSnapPayload);
    if (fmt == FrameFormat::Invalid) ASSERT_TRUE(d.payload.empty());
    if (fmt == FrameFormat::Ieee8023Llc || fmt == FrameFormat::Ieee8023Snap ||
        fmt == FrameFormat::NovellRaw) {
      const std::size_t trailer = d.trailer ? d.trailer->length : 0;
      ASSERT_EQ(header_bytes(d) + d.payload.length + trailer, n);
      ASSERT_EQ(d.payload.offset, header_bytes(d));
    }
    ASSERT_EQ(d.length_conformant, n >= 60 && n <= 1514);
  }
}

TEST(Dissect, BuilderPadLandsInTrailer) {
  auto rng = testing::seeded_rng(4);
  for (std::size_t len = 0; len <= 50; ++len) {
    const Bytes payload = testing::random_bytes(rng, len);
    const RawFrame f = build_8023_llc(MacAddress{}, MacAddress{}, LlcHeader{0x06, 0x06, 0x03}, payload);
    const DissectedFrame d = dissect(f);
    ASSERT_EQ(d.payload.length, len);
    const std::size_t pad = f.size() - (17 + len);
    if (pad == 0) {
      ASSERT_FALSE(d.trailer);
    } else {
      ASSERT_EQ(d.trailer, (ByteRange{17 + len, pad}));
      for (Byte b : slice(f.bytes(), *d.trailer)) ASSERT_EQ(b, 0x00);
    }
  }
}

}  // namespace
}  // namespace ethframe
