#include <gtest/gtest.h>

#include <sstream>

#include "ethframe/corpus.hpp"
#include "ethframe/error.hpp"
#include "ethframe/pcap_io.hpp"
#include "reference_frames.hpp"
#include "pcap_oracle.hpp"
#include "test_random.hpp"

namespace ethframe {
namespace {

std::string write_to_string(const std::vector<PcapRecord>& records,
                            std::uint32_t snaplen = kDefaultSnaplen) {
  std::ostringstream out(std::ios::binary);
  write_pcap(records, out, snaplen);
  return out.str();
}

std::vector<PcapRecord> read_from_string(const std::string& bytes) {
  std::istringstream in(bytes, std::ios::binary);
  return read_pcap(in);
}

PcapRecord record_of(Bytes frame, std::uint32_t ts = 0) {
  PcapRecord r;
  r.ts_sec = ts;
  r.ts_usec = ts * 3 % 1000000;
  r.orig_len = static_cast<std::uint32_t>(frame.size());
  r.frame = RawFrame(std::move(frame));
  return r;
}

std::vector<PcapRecord> random_records(std::mt19937_64& rng, std::size_t count) {
  std::vector<PcapRecord> out;
  for (std::size_t i = 0; i < count; ++i) {
    PcapRecord r = record_of(testing::random_bytes(rng, testing::random_size(rng, 0, 2000)));
    r.ts_sec = static_cast<std::uint32_t>(rng());
    r.ts_usec = static_cast<std::uint32_t>(rng() % 1000000);
    r.orig_len = r.incl_len() + static_cast<std::uint32_t>(rng() % 3 == 0 ? rng() % 100 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

TEST(Pcap, EmptyCaptureIsHeaderOnly) {
  const std::string file = write_to_string({});
  ASSERT_EQ(file.size(), 24u);
  const std::string expected_header(
      "\xd4\xc3\xb2\xa1\x02\x00\x04\x00\x00\x00\x00\x00\x00\x00\x00\x00\xff\xff\x00\x00\x01\x00\x00\x00",
      24);
  EXPECT_EQ(file, expected_header);
  EXPECT_TRUE(read_from_string(file).empty());

  std::istringstream in(file);
  PcapReader reader(in);
  EXPECT_EQ(reader.header(), PcapFileHeader{});
  EXPECT_FALSE(reader.byte_swapped());
}

TEST(Pcap, OneSixtyByteFrame) {
  const std::vector<PcapRecord> records{record_of(testing::arp_request_frame(), 1)};
  const std::string file = write_to_string(records);
  EXPECT_EQ(file.size(), 24u + 16u + 60u);
  const auto back = read_from_string(file);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].incl_len(), 60u);
  EXPECT_EQ(back[0].orig_len, 60u);
  EXPECT_EQ(back[0], records[0]);
}

TEST(Pcap, WriterReportsByteCounts) {
  std::ostringstream out;
  PcapWriter writer(out);
  EXPECT_EQ(writer.bytes_written(), 24u);
  EXPECT_EQ(writer.write(record_of(Bytes(60, 1))), 76u);
  EXPECT_EQ(writer.bytes_written(), 100u);
}

TEST(Pcap, ByteSwappedFileReadsIdentically) {
  auto rng = testing::seeded_rng(20);
  const auto records = random_records(rng, 50);
  const std::string native = write_to_string(records);
  const std::string swapped = testing::byte_swap_capture(native);
  ASSERT_NE(native, swapped);
  std::istringstream in(swapped);
  PcapReader reader(in);
  EXPECT_TRUE(reader.byte_swapped());
  EXPECT_EQ(reader.header(), PcapFileHeader{});
  std::vector<PcapRecord> back;
  while (auto r = reader.next()) back.push_back(std::move(*r));
  EXPECT_EQ(back, records);
}

TEST(Pcap, WriteReadIsIdentity) {
  auto rng = testing::seeded_rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto records = random_records(rng, testing::random_size(rng, 0, 40));
    const std::string file = write_to_string(records);
    ASSERT_EQ(read_from_string(file), records);
    // And writing what was read gives the same bytes.
    ASSERT_EQ(write_to_string(read_from_string(file)), file);
  }
}

TEST(Pcap, TruncatedRecordKeepsEarlierRecords) {
  auto rng = testing::seeded_rng(22);
  const auto records = random_records(rng, 3);
  const std::string file = write_to_string(records);
  const std::size_t third = 24 + 2 * 16 + records[0].frame.size() + records[1].frame.size();

  for (std::size_t cut : {third + 5, third + 16 + records[2].frame.size() / 2}) {
    if (cut >= file.size()) continue;
    std::istringstream in(file.substr(0, cut));
    PcapReader reader(in);
    EXPECT_EQ(*reader.next(), records[0]);
    EXPECT_EQ(*reader.next(), records[1]);
    try {
      (void)reader.next();
      FAIL() << "expected truncation at " << cut;
    } catch (const PcapError& e) {
      EXPECT_EQ(e.code(), Errc::TruncatedRecord);
      EXPECT_EQ(e.record_index(), 2u);
    }
  }
}

TEST(Pcap, BadMagic) {
  for (const std::string junk : {std::string("hello, this is not a pcap file!"), std::string("\xd4\xc3")}) {
    std::istringstream in(junk);
    try {
      PcapReader reader(in);
      FAIL();
    } catch (const PcapError& e) {
      EXPECT_EQ(e.code(), Errc::BadMagic);
    }
  }
  // Nanosecond-resolution magic is not supported.
  std::string nano = write_to_string({});
  nano[0] = '\x4d';
  nano[1] = '\x3c';
  std::istringstream in(nano);
  EXPECT_THROW(PcapReader{in}, PcapError);
}

TEST(Pcap, UnsupportedLinkType) {
  std::string file = write_to_string({});
  file[20] = 113;  // Linux cooked capture
  std::istringstream in(file);
  try {
    PcapReader reader(in);
    FAIL();
  } catch (const PcapError& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedLinkType);
  }
}

void put_le32(std::string& s, std::size_t at, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s[at + static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
}

TEST(Pcap, LyingLengthsDoNotForceLargeAllocations) {
  std::string file = write_to_string({record_of(Bytes(10, 7))});
  // incl_len above snaplen is rejected before reading.
  std::string over = file;
  put_le32(over, 24 + 8, 0xFFFFFFF0u);
  {
    std::istringstream in(over);
    PcapReader reader(in);
    try {
      (void)reader.next();
      FAIL();
    } catch (const PcapError& e) {
      EXPECT_EQ(e.code(), Errc::RecordTooLarge);
      EXPECT_EQ(e.record_index(), 0u);
    }
  }
  // A huge snaplen with a huge claimed length hits end of file in the
  // first chunk instead of allocating a gigabyte.
  std::string huge = file;
  put_le32(huge, 16, 0xFFFFFFFFu);
  put_le32(huge, 24 + 8, 1'000'000'000u);
  {
    std::istringstream in(huge);
    PcapReader reader(in);
    try {
      (void)reader.next();
      FAIL();
    } catch (const PcapError& e) {
      EXPECT_EQ(e.code(), Errc::TruncatedRecord);
    }
  }
}

TEST(Pcap, WriterRejectsOversizedAndInconsistentRecords) {
  std::ostringstream out;
  PcapWriter writer(out, 100);
  try {
    writer.write(record_of(Bytes(101, 0)));
    FAIL();
  } catch (const PcapError& e) {
    EXPECT_EQ(e.code(), Errc::RecordTooLarge);
  }
  PcapRecord r = record_of(Bytes(60, 0));
  r.orig_len = 59;
  EXPECT_THROW(writer.write(r), Error);
}

TEST(Pcap, FullPopulationCorpusRoundTrips) {
  const auto records = generate_corpus(FrameMix{6318, 88, 5, 0}, 1);
  const auto back = read_from_string(write_to_string(records));
  EXPECT_EQ(back.size(), 6411u);
  EXPECT_EQ(back, records);
}

}  // namespace
}  // namespace ethframe
