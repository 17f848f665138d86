#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ethframe/frame_model.hpp"
#include "ethframe/pcap_io.hpp"

namespace ethframe {

/// Requested number of frames per valid format.
struct FrameMix {
  std::uint64_t ethernet_ii = 0;
  std::uint64_t llc = 0;
  std::uint64_t snap = 0;
  std::uint64_t novell = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return ethernet_ii + llc + snap + novell; }

  friend bool operator==(const FrameMix&, const FrameMix&) = default;
};

/// Parses "e2=6318,llc=88,snap=5,novell=0". Keys may be omitted or appear in
/// any order; unknown or repeated keys and malformed counts yield nullopt.
std::optional<FrameMix> parse_mix(std::string_view text);

std::string to_string(const FrameMix& mix);

/// One random builder-produced frame of `format` (not Invalid). Payloads
/// never start FF FF unless Novell, and LLC headers are never AA/AA/03, so
/// the frame classifies as `format`.
RawFrame random_frame(FrameFormat format, std::mt19937_64& rng);

/// Deterministic corpus for `seed`: the mix in shuffled order, with
/// synthetic monotonically increasing timestamps.
std::vector<PcapRecord> generate_corpus(const FrameMix& mix, std::uint64_t seed);

}  // namespace ethframe
