#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ethframe {

/// Failure codes raised by the decoders, builders and pcap layer.
/// Classification itself never throws; it reports Invalid verdicts instead.
enum class Errc {
  ContractViolation,
  TruncatedArp,
  UnsupportedArpGeometry,
  NotBpdu,
  TruncatedBpdu,
  NotAnEtherType,
  PayloadTooLarge,
  AmbiguousHeader,
  NotRawIpx,
  BadMagic,
  UnsupportedLinkType,
  TruncatedRecord,
  RecordTooLarge,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Pcap failures that refer to a specific record carry its zero-based index.
class PcapError : public Error {
 public:
  PcapError(Errc code, const std::string& message,
            std::optional<std::size_t> record_index = std::nullopt);

  [[nodiscard]] std::optional<std::size_t> record_index() const noexcept { return record_index_; }

 private:
  std::optional<std::size_t> record_index_;
};

}  // namespace ethframe
