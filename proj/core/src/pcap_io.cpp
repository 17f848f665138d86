#include "ethframe/pcap_io.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

#include <fmt/format.h>

#include "ethframe/error.hpp"

namespace ethframe {

namespace {

constexpr std::size_t kReadChunk = 64 * 1024;

std::uint32_t load_le32(const Byte* p) noexcept {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

void store_le16(Byte* p, std::uint16_t v) noexcept {
  p[0] = static_cast<Byte>(v & 0xFF);
  p[1] = static_cast<Byte>(v >> 8);
}

void store_le32(Byte* p, std::uint32_t v) noexcept {
  store_le16(p, static_cast<std::uint16_t>(v & 0xFFFF));
  store_le16(p + 2, static_cast<std::uint16_t>(v >> 16));
}

std::size_t read_some(std::istream& in, Byte* dst, std::size_t n) {
  in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
  return static_cast<std::size_t>(in.gcount());
}

}  // namespace

PcapReader::PcapReader(std::istream& in) : in_(&in) {
  std::array<Byte, kPcapFileHeaderSize> raw{};
  if (read_some(in, raw.data(), raw.size()) != raw.size()) {
    throw PcapError(Errc::BadMagic, "file shorter than the 24-byte pcap header");
  }
  const std::uint32_t magic = load_le32(raw.data());
  if (magic == kPcapMagic) {
    swapped_ = false;
  } else if (magic == kPcapMagicSwapped) {
    swapped_ = true;
  } else {
    throw PcapError(Errc::BadMagic, fmt::format("0x{:08x}", magic));
  }
  header_.magic = kPcapMagic;
  header_.version_major = u16(raw.data() + 4);
  header_.version_minor = u16(raw.data() + 6);
  header_.thiszone = static_cast<std::int32_t>(u32(raw.data() + 8));
  header_.sigfigs = u32(raw.data() + 12);
  header_.snaplen = u32(raw.data() + 16);
  header_.linktype = u32(raw.data() + 20);
  if (header_.linktype != kLinkTypeEthernet) {
    throw PcapError(Errc::UnsupportedLinkType, fmt::format("link type {}", header_.linktype));
  }
}

std::uint32_t PcapReader::u32(const Byte* p) const noexcept {
  const std::uint32_t v = load_le32(p);
  if (!swapped_) return v;
  return (v >> 24) | ((v >> 8) & 0xFF00u) | ((v << 8) & 0xFF0000u) | (v << 24);
}

std::uint16_t PcapReader::u16(const Byte* p) const noexcept {
  if (!swapped_) return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::optional<PcapRecord> PcapReader::next() {
  std::array<Byte, kPcapRecordHeaderSize> raw{};
  const std::size_t got = read_some(*in_, raw.data(), raw.size());
  if (got == 0) return std::nullopt;
  if (got != raw.size()) {
    throw PcapError(Errc::TruncatedRecord,
                    fmt::format("record {}: header cut short after {} bytes", index_, got), index_);
  }

  PcapRecord record;
  record.ts_sec = u32(raw.data());
  record.ts_usec = u32(raw.data() + 4);
  const std::uint32_t incl_len = u32(raw.data() + 8);
  record.orig_len = u32(raw.data() + 12);

  if (incl_len > header_.snaplen) {
    throw PcapError(Errc::RecordTooLarge,
                    fmt::format("record {}: incl_len {} exceeds snaplen {}", index_, incl_len,
                                header_.snaplen),
                    index_);
  }

  // Grow with the data actually present so a lying length cannot force a
  // large allocation.
  Bytes data;
  data.reserve(std::min<std::size_t>(incl_len, kReadChunk));
  std::size_t remaining = incl_len;
  while (remaining > 0) {
    const std::size_t want = std::min(remaining, kReadChunk);
    const std::size_t old = data.size();
    data.resize(old + want);
    const std::size_t n = read_some(*in_, data.data() + old, want);
    if (n != want) {
      throw PcapError(Errc::TruncatedRecord,
                      fmt::format("record {}: {} of {} data bytes present", index_,
                                  old + n, incl_len),
                      index_);
    }
    remaining -= want;
  }
  record.frame = RawFrame(std::move(data));
  ++index_;
  return record;
}

std::vector<PcapRecord> read_pcap(std::istream& in) {
  PcapReader reader(in);
  std::vector<PcapRecord> records;
  while (auto record = reader.next()) records.push_back(std::move(*record));
  return records;
}

PcapWriter::PcapWriter(std::ostream& out, std::uint32_t snaplen) : out_(&out), snaplen_(snaplen) {
  std::array<Byte, kPcapFileHeaderSize> raw{};
  const PcapFileHeader h{.snaplen = snaplen};
  store_le32(raw.data(), h.magic);
  store_le16(raw.data() + 4, h.version_major);
  store_le16(raw.data() + 6, h.version_minor);
  store_le32(raw.data() + 8, static_cast<std::uint32_t>(h.thiszone));
  store_le32(raw.data() + 12, h.sigfigs);
  store_le32(raw.data() + 16, h.snaplen);
  store_le32(raw.data() + 20, h.linktype);
  emit(raw);
}

void PcapWriter::emit(std::span<const Byte> bytes) {
  out_->write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  if (!*out_) throw Error(Errc::Io, "write failed");
  written_ += bytes.size();
}

std::size_t PcapWriter::write(const PcapRecord& record) {
  if (record.frame.size() > snaplen_) {
    throw PcapError(Errc::RecordTooLarge,
                    fmt::format("record {}: {} bytes exceeds snaplen {}", index_,
                                record.frame.size(), snaplen_),
                    index_);
  }
  if (record.orig_len < record.incl_len()) {
    throw Error(Errc::ContractViolation,
                fmt::format("record {}: orig_len {} below incl_len {}", index_, record.orig_len,
                            record.incl_len()));
  }
  std::array<Byte, kPcapRecordHeaderSize> raw{};
  store_le32(raw.data(), record.ts_sec);
  store_le32(raw.data() + 4, record.ts_usec);
  store_le32(raw.data() + 8, record.incl_len());
  store_le32(raw.data() + 12, record.orig_len);
  emit(raw);
  emit(record.frame.bytes());
  ++index_;
  return kPcapRecordHeaderSize + record.frame.size();
}

std::size_t write_pcap(std::span<const PcapRecord> records, std::ostream& out,
                       std::uint32_t snaplen) {
  PcapWriter writer(out, snaplen);
  for (const PcapRecord& record : records) writer.write(record);
  return writer.bytes_written();
}

}  // namespace ethframe
