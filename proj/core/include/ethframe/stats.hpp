#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ethframe/frame_model.hpp"

namespace ethframe {

/// Per-kind frame population and byte totals for a capture. A value type
/// forming a commutative monoid under merge, with the default-constructed
/// instance as identity, so shards can be accumulated independently.
class CaptureStats {
 public:
  static constexpr std::size_t kinds = FrameKind::variant_count;

  void add(const FrameKind& kind, std::size_t wire_length) noexcept;
  CaptureStats& operator+=(const CaptureStats& other) noexcept;

  [[nodiscard]] std::uint64_t count(const FrameKind& kind) const noexcept {
    return counts_[kind.ordinal()];
  }
  [[nodiscard]] std::uint64_t bytes(const FrameKind& kind) const noexcept {
    return bytes_[kind.ordinal()];
  }
  [[nodiscard]] std::uint64_t total_frames() const noexcept;
  [[nodiscard]] std::uint64_t total_bytes() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return total_frames() == 0; }

  /// Smallest and largest frame seen; 0 for empty stats.
  [[nodiscard]] std::uint64_t min_frame() const noexcept { return min_frame_.value_or(0); }
  [[nodiscard]] std::uint64_t max_frame() const noexcept { return max_frame_.value_or(0); }

  /// Mean frame size in tenths of a byte, rounded half up; 0 when empty.
  [[nodiscard]] std::uint64_t mean_frame_tenths() const noexcept;

  friend bool operator==(const CaptureStats&, const CaptureStats&) = default;

 private:
  std::array<std::uint64_t, kinds> counts_{};
  std::array<std::uint64_t, kinds> bytes_{};
  std::optional<std::uint64_t> min_frame_;
  std::optional<std::uint64_t> max_frame_;
};

struct DissectedFrame;

/// Counts one frame under its dissected kind.
CaptureStats accumulate(CaptureStats stats, const DissectedFrame& frame, std::size_t wire_length);

CaptureStats merge(const CaptureStats& a, const CaptureStats& b);

/// Share of frames per kind (indexed by FrameKind::ordinal) in tenths of a
/// percent. Uses largest-remainder apportionment so that nonempty stats
/// always sum to exactly 1000 and every entry is within 0.1 of the exact
/// share; ties go to the lower ordinal.
std::array<std::uint64_t, CaptureStats::kinds> percent_tenths(const CaptureStats& stats);

/// 985 -> "98.5"
std::string format_tenths(std::uint64_t tenths);

enum class ReportFormat { Text, Delimited };

/// Text: aligned table of kind, frames, bytes and percent, a TOTAL row, and
/// min/max/mean frame sizes.
/// Delimited: header "kind,count,bytes,percent", one row per observed kind,
/// then "TOTAL,<frames>,<bytes>,100.0" ("0.0" when empty).
std::string render_report(const CaptureStats& stats, ReportFormat format);

}  // namespace ethframe
