#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ethframe/frame_model.hpp"

namespace ethframe {

// Classic libpcap capture files (not pcapng, not nanosecond magic).
//
//   global header, 24 bytes:
//     magic(4) version_major(2) version_minor(2) thiszone(4) sigfigs(4)
//     snaplen(4) linktype(4)
//   per record, 16 bytes + data:
//     ts_sec(4) ts_usec(4) incl_len(4) orig_len(4) data(incl_len)
//
// Multi-byte fields are in the byte order announced by the magic. Files are
// written little-endian; both orders are read.

inline constexpr std::uint32_t kPcapMagic = 0xA1B2C3D4;
inline constexpr std::uint32_t kPcapMagicSwapped = 0xD4C3B2A1;
inline constexpr std::uint32_t kLinkTypeEthernet = 1;
inline constexpr std::uint32_t kDefaultSnaplen = 65535;
inline constexpr std::size_t kPcapFileHeaderSize = 24;
inline constexpr std::size_t kPcapRecordHeaderSize = 16;

struct PcapFileHeader {
  std::uint32_t magic = kPcapMagic;
  std::uint16_t version_major = 2;
  std::uint16_t version_minor = 4;
  std::int32_t thiszone = 0;
  std::uint32_t sigfigs = 0;
  std::uint32_t snaplen = kDefaultSnaplen;
  std::uint32_t linktype = kLinkTypeEthernet;

  friend bool operator==(const PcapFileHeader&, const PcapFileHeader&) = default;
};

/// One captured frame. incl_len is the stored byte count, i.e. frame.size().
struct PcapRecord {
  std::uint32_t ts_sec = 0;
  std::uint32_t ts_usec = 0;
  std::uint32_t orig_len = 0;
  RawFrame frame;

  [[nodiscard]] std::uint32_t incl_len() const noexcept {
    return static_cast<std::uint32_t>(frame.size());
  }

  friend bool operator==(const PcapRecord&, const PcapRecord&) = default;
};

/// Streaming reader. Single owner; the stream must outlive the reader.
class PcapReader {
 public:
  /// Reads and validates the global header.
  /// Throws PcapError: BadMagic, UnsupportedLinkType.
  explicit PcapReader(std::istream& in);

  [[nodiscard]] const PcapFileHeader& header() const noexcept { return header_; }
  /// True when the file's byte order is big-endian.
  [[nodiscard]] bool byte_swapped() const noexcept { return swapped_; }
  [[nodiscard]] std::size_t records_read() const noexcept { return index_; }

  /// Next record in file order, or nullopt at a clean end of file. Throws
  /// PcapError(TruncatedRecord) if a record is cut short and
  /// PcapError(RecordTooLarge) if incl_len exceeds the snaplen; both carry
  /// the record index. Records already returned stay valid.
  std::optional<PcapRecord> next();

 private:
  [[nodiscard]] std::uint32_t u32(const Byte* p) const noexcept;
  [[nodiscard]] std::uint16_t u16(const Byte* p) const noexcept;

  std::istream* in_;
  PcapFileHeader header_;
  bool swapped_ = false;
  std::size_t index_ = 0;
};

/// Reads every record. Throws on the first malformed record.
std::vector<PcapRecord> read_pcap(std::istream& in);

class PcapWriter {
 public:
  /// Writes the global header immediately.
  explicit PcapWriter(std::ostream& out, std::uint32_t snaplen = kDefaultSnaplen);

  /// Returns the number of bytes emitted for this record. Throws
  /// PcapError(RecordTooLarge) when the frame exceeds the snaplen and
  /// Error(ContractViolation) when orig_len is below the frame size.
  std::size_t write(const PcapRecord& record);

  [[nodiscard]] std::size_t bytes_written() const noexcept { return written_; }

 private:
  void emit(std::span<const Byte> bytes);

  std::ostream* out_;
  std::uint32_t snaplen_;
  std::size_t written_ = 0;
  std::size_t index_ = 0;
};

/// Writes a complete capture and returns the total byte count.
std::size_t write_pcap(std::span<const PcapRecord> records, std::ostream& out,
                       std::uint32_t snaplen = kDefaultSnaplen);

}  // namespace ethframe
