#include "ethframe/stats.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "ethframe/frame_model.hpp"

namespace ethframe {

void CaptureStats::add(const FrameKind& kind, std::size_t wire_length) noexcept {
  const std::uint64_t len = wire_length;
  ++counts_[kind.ordinal()];
  bytes_[kind.ordinal()] += len;
  min_frame_ = min_frame_ ? std::min(*min_frame_, len) : len;
  max_frame_ = max_frame_ ? std::max(*max_frame_, len) : len;
}

CaptureStats& CaptureStats::operator+=(const CaptureStats& other) noexcept {
  for (std::size_t i = 0; i < kinds; ++i) {
    counts_[i] += other.counts_[i];
    bytes_[i] += other.bytes_[i];
  }
  if (other.min_frame_) {
    min_frame_ = min_frame_ ? std::min(*min_frame_, *other.min_frame_) : other.min_frame_;
  }
  if (other.max_frame_) {
    max_frame_ = max_frame_ ? std::max(*max_frame_, *other.max_frame_) : other.max_frame_;
  }
  return *this;
}

std::uint64_t CaptureStats::total_frames() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t CaptureStats::total_bytes() const noexcept {
  return std::accumulate(bytes_.begin(), bytes_.end(), std::uint64_t{0});
}

std::uint64_t CaptureStats::mean_frame_tenths() const noexcept {
  const std::uint64_t frames = total_frames();
  if (frames == 0) return 0;
  return (total_bytes() * 20 + frames) / (frames * 2);
}

CaptureStats accumulate(CaptureStats stats, const DissectedFrame& frame, std::size_t wire_length) {
  stats.add(frame.kind, wire_length);
  return stats;
}

CaptureStats merge(const CaptureStats& a, const CaptureStats& b) {
  CaptureStats out = a;
  out += b;
  return out;
}

std::array<std::uint64_t, CaptureStats::kinds> percent_tenths(const CaptureStats& stats) {
  std::array<std::uint64_t, CaptureStats::kinds> tenths{};
  const std::uint64_t total = stats.total_frames();
  if (total == 0) return tenths;

  std::array<std::uint64_t, CaptureStats::kinds> remainder{};
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < CaptureStats::kinds; ++i) {
    const std::uint64_t scaled = stats.count(*FrameKind::from_ordinal(i)) * 1000;
    tenths[i] = scaled / total;
    remainder[i] = scaled % total;
    assigned += tenths[i];
  }

  std::array<std::size_t, CaptureStats::kinds> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return remainder[l] > remainder[r]; });
  for (std::size_t k = 0; assigned < 1000; ++k, ++assigned) ++tenths[order[k]];
  return tenths;
}

std::string format_tenths(std::uint64_t tenths) {
  return fmt::format("{}.{}", tenths / 10, tenths % 10);
}

std::string render_report(const CaptureStats& stats, ReportFormat format) {
  const auto shares = percent_tenths(stats);
  const std::string total_percent = stats.empty() ? "0.0" : "100.0";
  std::string out;

  if (format == ReportFormat::Delimited) {
    out += "kind,count,bytes,percent\n";
    for (std::size_t i = 0; i < CaptureStats::kinds; ++i) {
      const FrameKind kind = *FrameKind::from_ordinal(i);
      if (stats.count(kind) == 0) continue;
      out += fmt::format("{},{},{},{}\n", kind.name(), stats.count(kind), stats.bytes(kind),
                         format_tenths(shares[i]));
    }
    out += fmt::format("TOTAL,{},{},{}\n", stats.total_frames(), stats.total_bytes(),
                       total_percent);
    return out;
  }

  out += fmt::format("{:<28} {:>10} {:>12} {:>8}\n", "kind", "frames", "bytes", "percent");
  for (std::size_t i = 0; i < CaptureStats::kinds; ++i) {
    const FrameKind kind = *FrameKind::from_ordinal(i);
    if (stats.count(kind) == 0) continue;
    out += fmt::format("{:<28} {:>10} {:>12} {:>8}\n", kind.name(), stats.count(kind),
                       stats.bytes(kind), format_tenths(shares[i]));
  }
  out += fmt::format("{:<28} {:>10} {:>12} {:>8}\n", "TOTAL", stats.total_frames(),
                     stats.total_bytes(), total_percent);
  out += fmt::format("\nmin frame:  {} bytes\nmax frame:  {} bytes\nmean frame: {} bytes\n",
                     stats.min_frame(), stats.max_frame(),
                     format_tenths(stats.mean_frame_tenths()));
  return out;
}

}  // namespace ethframe
