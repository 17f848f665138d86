#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ethframe/bytes.hpp"
#include "ethframe/mac_address.hpp"

namespace ethframe {

// Link-layer geometry. Lengths run from the destination address through the
// data field; preamble, SOF delimiter and FCS are physical layer and absent.
inline constexpr std::size_t kAddressLength = 6;
inline constexpr std::size_t kTypeOrLengthOffset = 12;
inline constexpr std::size_t kHeaderLength = 14;
inline constexpr std::size_t kLlcHeaderLength = 3;
inline constexpr std::size_t kSnapHeaderLength = 5;
inline constexpr std::size_t kMinFrameLength = 60;
inline constexpr std::size_t kMaxFrameLength = 1514;

inline constexpr std::size_t kMaxEthernetPayload = 1500;
inline constexpr std::size_t kMaxNovellPayload = 1500;
inline constexpr std::size_t kMaxLlcPayload = kMaxEthernetPayload - kLlcHeaderLength;               // 1497
inline constexpr std::size_t kMaxSnapPayload = kMaxLlcPayload - kSnapHeaderLength;                  // 1492

inline constexpr std::uint16_t kMaxLengthField = 1500;
inline constexpr std::uint16_t kMinEtherType = 0x0600;

[[nodiscard]] constexpr bool is_length_conformant(std::size_t frame_length) noexcept {
  return frame_length >= kMinFrameLength && frame_length <= kMaxFrameLength;
}

/// One captured link-layer frame. Immutable once constructed.
class RawFrame {
 public:
  RawFrame() = default;
  explicit RawFrame(Bytes bytes) noexcept : bytes_(std::move(bytes)) {}
  explicit RawFrame(ByteView bytes) : bytes_(bytes.begin(), bytes.end()) {}

  [[nodiscard]] ByteView bytes() const noexcept { return bytes_; }
  [[nodiscard]] std::size_t size() const noexcept { return bytes_.size(); }
  [[nodiscard]] bool length_conformant() const noexcept { return is_length_conformant(size()); }

  friend bool operator==(const RawFrame&, const RawFrame&) = default;

 private:
  Bytes bytes_;
};

enum class FrameFormat : std::uint8_t {
  EthernetII,
  Ieee8023Llc,
  Ieee8023Snap,
  NovellRaw,
  Invalid,
};

/// Exhaustive list of reasons a frame cannot be classified.
enum class InvalidReason : std::uint8_t {
  TooShort,            // fewer than 14 bytes
  TypeLengthGap,       // 2-byte field in 1501..1535
  LengthExceedsFrame,  // declared length runs past the captured bytes
  TruncatedLlc,        // declared length leaves no room for DSAP/SSAP/CTRL
  TruncatedSnap,       // AA/AA/03 signature without the 5-byte SNAP extension
};

inline constexpr std::size_t kInvalidReasonCount = 5;

std::string_view to_string(InvalidReason reason) noexcept;

/// Classification verdict: one of the four frame formats, or Invalid with a
/// reason code.
class FrameKind {
 public:
  /// Four formats plus one Invalid variant per reason.
  static constexpr std::size_t variant_count = 4 + kInvalidReasonCount;

  static constexpr FrameKind ethernet_ii() noexcept { return FrameKind(FrameFormat::EthernetII); }
  static constexpr FrameKind llc() noexcept { return FrameKind(FrameFormat::Ieee8023Llc); }
  static constexpr FrameKind snap() noexcept { return FrameKind(FrameFormat::Ieee8023Snap); }
  static constexpr FrameKind novell_raw() noexcept { return FrameKind(FrameFormat::NovellRaw); }
  static constexpr FrameKind invalid(InvalidReason reason) noexcept {
    return FrameKind(FrameFormat::Invalid, reason);
  }

  /// Inverse of ordinal(); nullopt when out of range.
  static std::optional<FrameKind> from_ordinal(std::size_t ordinal) noexcept;
  /// Inverse of name(), e.g. "Ieee8023Snap" or "Invalid(TypeLengthGap)".
  static std::optional<FrameKind> from_name(std::string_view name) noexcept;

  [[nodiscard]] constexpr FrameFormat format() const noexcept { return format_; }
  [[nodiscard]] constexpr bool is_valid() const noexcept { return format_ != FrameFormat::Invalid; }
  [[nodiscard]] constexpr bool is(FrameFormat f) const noexcept { return format_ == f; }
  [[nodiscard]] constexpr std::optional<InvalidReason> reason() const noexcept {
    if (is_valid()) return std::nullopt;
    return reason_;
  }

  /// Dense index in [0, variant_count): formats first, then Invalid reasons.
  [[nodiscard]] constexpr std::size_t ordinal() const noexcept {
    if (is_valid()) return static_cast<std::size_t>(format_);
    return 4 + static_cast<std::size_t>(reason_);
  }

  [[nodiscard]] std::string_view name() const noexcept;

  friend constexpr bool operator==(const FrameKind&, const FrameKind&) = default;

 private:
  constexpr explicit FrameKind(FrameFormat format,
                               InvalidReason reason = InvalidReason::TooShort) noexcept
      : format_(format), reason_(format == FrameFormat::Invalid ? reason : InvalidReason::TooShort) {}

  FrameFormat format_;
  InvalidReason reason_;
};

/// Upper seven bits of a DSAP/SSAP byte: the protocol code.
[[nodiscard]] constexpr Byte sap_value(Byte sap) noexcept { return static_cast<Byte>(sap >> 1); }
/// Low bit of a SAP byte: I/G on the DSAP, C/R on the SSAP.
[[nodiscard]] constexpr bool sap_flag(Byte sap) noexcept { return (sap & 0x01) != 0; }

inline constexpr Byte kSnapSap = 0xAA;
inline constexpr Byte kUnnumberedInformation = 0x03;
inline constexpr Byte kStpSap = 0x42;
inline constexpr Byte kRawIpxChecksumByte = 0xFF;

/// IEEE 802.2 LLC header.
struct LlcHeader {
  Byte dsap = 0;
  Byte ssap = 0;
  Byte control = 0;

  /// false = Individual, true = Group.
  [[nodiscard]] constexpr bool ig_bit() const noexcept { return sap_flag(dsap); }
  /// false = Command, true = Response.
  [[nodiscard]] constexpr bool cr_bit() const noexcept { return sap_flag(ssap); }

  [[nodiscard]] constexpr bool is_snap_signature() const noexcept {
    return dsap == kSnapSap && ssap == kSnapSap && control == kUnnumberedInformation;
  }
  /// DSAP/SSAP of FF FF collide with the raw IPX checksum word.
  [[nodiscard]] constexpr bool is_raw_ipx_pattern() const noexcept {
    return dsap == kRawIpxChecksumByte && ssap == kRawIpxChecksumByte;
  }

  friend constexpr bool operator==(const LlcHeader&, const LlcHeader&) = default;
};

using Oui = std::array<Byte, 3>;

inline constexpr Oui kEncapsulatedEthernetOui{0x00, 0x00, 0x00};
inline constexpr Oui kCiscoOui{0x00, 0x00, 0x0C};

/// "00:00:0c"
std::string format_oui(const Oui& oui);

/// SNAP extension following an AA/AA/03 LLC header.
struct SnapHeader {
  Oui oui{};
  std::uint16_t pid = 0;

  /// A zero OUI means the PID is an EtherType; any other OUI scopes a
  /// private protocol id that must not be read as one.
  [[nodiscard]] constexpr std::optional<std::uint16_t> ether_type() const noexcept {
    if (oui == kEncapsulatedEthernetOui) return pid;
    return std::nullopt;
  }

  friend constexpr bool operator==(const SnapHeader&, const SnapHeader&) = default;
};

/// Structured view over a frame. Spans refer to the original bytes, which
/// must outlive and stay unmodified alongside the view.
struct DissectedFrame {
  MacAddress dst;
  MacAddress src;
  FrameKind kind = FrameKind::invalid(InvalidReason::TooShort);
  std::uint16_t type_or_length = 0;
  std::optional<LlcHeader> llc;
  std::optional<SnapHeader> snap;
  ByteRange payload;
  std::optional<ByteRange> trailer;
  bool length_conformant = false;
  std::size_t frame_length = 0;

  friend bool operator==(const DissectedFrame&, const DissectedFrame&) = default;
};

}  // namespace ethframe
