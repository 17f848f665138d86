#include "ethframe/error.hpp"

namespace ethframe {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ContractViolation: return "contract violation";
    case Errc::TruncatedArp: return "truncated ARP packet";
    case Errc::UnsupportedArpGeometry: return "unsupported ARP geometry";
    case Errc::NotBpdu: return "not a spanning tree BPDU";
    case Errc::TruncatedBpdu: return "truncated BPDU";
    case Errc::NotAnEtherType: return "not an EtherType";
    case Errc::PayloadTooLarge: return "payload too large";
    case Errc::AmbiguousHeader: return "ambiguous LLC header";
    case Errc::NotRawIpx: return "not a raw IPX packet";
    case Errc::BadMagic: return "bad magic";
    case Errc::UnsupportedLinkType: return "unsupported link type";
    case Errc::TruncatedRecord: return "truncated record";
    case Errc::RecordTooLarge: return "record too large";
    case Errc::Io: return "i/o error";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

PcapError::PcapError(Errc code, const std::string& message,
                     std::optional<std::size_t> record_index)
    : Error(code, message), record_index_(record_index) {}

}  // namespace ethframe
