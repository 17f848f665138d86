#include "ethframe/corpus.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "ethframe/frame_builder.hpp"

namespace ethframe {

std::optional<FrameMix> parse_mix(std::string_view text) {
  FrameMix mix;
  std::array<bool, 4> seen{};
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (comma != std::string_view::npos && text.empty()) return std::nullopt;

    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);

    std::uint64_t count = 0;
    const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), count);
    if (ec != std::errc{} || end != value.data() + value.size() || value.empty()) {
      return std::nullopt;
    }

    std::size_t slot = 0;
    if (key == "e2") {
      slot = 0;
      mix.ethernet_ii = count;
    } else if (key == "llc") {
      slot = 1;
      mix.llc = count;
    } else if (key == "snap") {
      slot = 2;
      mix.snap = count;
    } else if (key == "novell") {
      slot = 3;
      mix.novell = count;
    } else {
      return std::nullopt;
    }
    if (seen[slot]) return std::nullopt;
    seen[slot] = true;
  }
  return mix;
}

std::string to_string(const FrameMix& mix) {
  return "e2=" + std::to_string(mix.ethernet_ii) + ",llc=" + std::to_string(mix.llc) +
         ",snap=" + std::to_string(mix.snap) + ",novell=" + std::to_string(mix.novell);
}

namespace {

template <typename T>
T pick(std::mt19937_64& rng, std::initializer_list<T> choices) {
  std::uniform_int_distribution<std::size_t> dist(0, choices.size() - 1);
  return *(choices.begin() + dist(rng));
}

MacAddress random_mac(std::mt19937_64& rng, bool unicast) {
  std::uniform_int_distribution<int> byte(0, 255);
  MacAddress::Octets o{};
  for (auto& b : o) b = static_cast<Byte>(byte(rng));
  if (unicast) o[0] = static_cast<Byte>(o[0] & 0xFE);
  return MacAddress(o);
}

/// Mostly small payloads with an occasional large one, like real LAN
/// traffic dominated by short control frames.
std::size_t random_size(std::mt19937_64& rng, std::size_t min, std::size_t cap) {
  std::bernoulli_distribution large(0.2);
  const std::size_t hi = large(rng) ? cap : std::min(cap, min + 64);
  std::uniform_int_distribution<std::size_t> dist(min, hi);
  return dist(rng);
}

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> byte(0, 255);
  Bytes out(n);
  for (auto& b : out) b = static_cast<Byte>(byte(rng));
  return out;
}

}  // namespace

RawFrame random_frame(FrameFormat format, std::mt19937_64& rng) {
  const MacAddress dst = random_mac(rng, false);
  const MacAddress src = random_mac(rng, true);
  switch (format) {
    case FrameFormat::EthernetII: {
      const auto type = pick<std::uint16_t>(rng, {0x0800, 0x0806, 0x86DD, 0x8137, 0x809B});
      Bytes payload = random_bytes(rng, random_size(rng, 0, kMaxEthernetPayload));
      return build_ethernet_ii(dst, src, type, payload);
    }
    case FrameFormat::Ieee8023Llc: {
      const auto sap = pick<Byte>(rng, {0x06, 0x42, 0xE0, 0xF0, 0xFE});
      const auto control = pick<Byte>(rng, {0x03, 0xAF, 0xE3});
      Bytes payload = random_bytes(rng, random_size(rng, 0, kMaxLlcPayload));
      return build_8023_llc(dst, src, LlcHeader{sap, sap, control}, payload);
    }
    case FrameFormat::Ieee8023Snap: {
      Bytes payload = random_bytes(rng, random_size(rng, 0, kMaxSnapPayload));
      if (std::bernoulli_distribution(0.5)(rng)) {
        const auto pid = pick<std::uint16_t>(rng, {0x2000, 0x2003});
        return build_8023_snap(dst, src, kCiscoOui, pid, payload);
      }
      const auto pid = pick<std::uint16_t>(rng, {0x0800, 0x0806, 0x8137});
      return build_8023_snap(dst, src, kEncapsulatedEthernetOui, pid, payload);
    }
    case FrameFormat::NovellRaw: {
      // 30 bytes is the fixed IPX header.
      Bytes packet = random_bytes(rng, random_size(rng, 30, kMaxNovellPayload));
      packet[0] = kRawIpxChecksumByte;
      packet[1] = kRawIpxChecksumByte;
      return build_novell_raw(dst, src, packet);
    }
    case FrameFormat::Invalid:
      break;
  }
  return RawFrame{};
}

std::vector<PcapRecord> generate_corpus(const FrameMix& mix, std::uint64_t seed) {
  std::vector<FrameFormat> order;
  order.reserve(mix.total());
  order.insert(order.end(), mix.ethernet_ii, FrameFormat::EthernetII);
  order.insert(order.end(), mix.llc, FrameFormat::Ieee8023Llc);
  order.insert(order.end(), mix.snap, FrameFormat::Ieee8023Snap);
  order.insert(order.end(), mix.novell, FrameFormat::NovellRaw);

  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  constexpr std::uint32_t kEpoch = 1'113'955'200;  // 2005-04-20
  std::vector<PcapRecord> records;
  records.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    PcapRecord record;
    record.ts_sec = kEpoch + static_cast<std::uint32_t>(i / 1000);
    record.ts_usec = static_cast<std::uint32_t>((i % 1000) * 1000);
    record.frame = random_frame(order[i], rng);
    record.orig_len = record.incl_len();
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace ethframe
