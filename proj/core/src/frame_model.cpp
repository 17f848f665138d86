#include "ethframe/frame_model.hpp"

#include <fmt/format.h>

namespace ethframe {

std::string_view to_string(InvalidReason reason) noexcept {
  switch (reason) {
    case InvalidReason::TooShort: return "TooShort";
    case InvalidReason::TypeLengthGap: return "TypeLengthGap";
    case InvalidReason::LengthExceedsFrame: return "LengthExceedsFrame";
    case InvalidReason::TruncatedLlc: return "TruncatedLlc";
    case InvalidReason::TruncatedSnap: return "TruncatedSnap";
  }
  return "Unknown";
}

namespace {

constexpr std::array<std::string_view, FrameKind::variant_count> kKindNames{
    "EthernetII",
    "Ieee8023Llc",
    "Ieee8023Snap",
    "NovellRaw",
    "Invalid(TooShort)",
    "Invalid(TypeLengthGap)",
    "Invalid(LengthExceedsFrame)",
    "Invalid(TruncatedLlc)",
    "Invalid(TruncatedSnap)",
};

}  // namespace

std::optional<FrameKind> FrameKind::from_ordinal(std::size_t ordinal) noexcept {
  if (ordinal < 4) return FrameKind(static_cast<FrameFormat>(ordinal));
  if (ordinal < variant_count) {
    return FrameKind::invalid(static_cast<InvalidReason>(ordinal - 4));
  }
  return std::nullopt;
}

std::optional<FrameKind> FrameKind::from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return from_ordinal(i);
  }
  return std::nullopt;
}

std::string_view FrameKind::name() const noexcept { return kKindNames[ordinal()]; }

std::string format_oui(const Oui& oui) {
  return fmt::format("{:02x}:{:02x}:{:02x}", oui[0], oui[1], oui[2]);
}

}  // namespace ethframe
