#include "ethframe/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ethframe/classifier.hpp"
#include "ethframe/corpus.hpp"
#include "ethframe/dissector.hpp"
#include "ethframe/error.hpp"
#include "ethframe/payload_decoders.hpp"
#include "ethframe/pcap_io.hpp"
#include "ethframe/stats.hpp"
#include "ethframe/trace_renderer.hpp"

namespace ethframe::cli {

namespace {

struct Options {
  std::string capture;
  std::string format = "text";
  std::size_t first = std::numeric_limits<std::size_t>::max();
  std::string kind;
  std::string output;
  std::string mix;
  std::uint64_t seed = 1;
  std::string hex;
};

int report_pcap_error(const PcapError& e, const std::string& path, std::ostream& err) {
  err << "ethframe: " << path << ": " << e.what() << '\n';
  return kExitDataError;
}

int cmd_stats(const Options& opt, std::ostream& out, std::ostream& err) {
  std::ifstream in(opt.capture, std::ios::binary);
  if (!in) {
    err << "ethframe: cannot open " << opt.capture << '\n';
    return kExitNoInput;
  }
  CaptureStats stats;
  try {
    PcapReader reader(in);
    while (auto record = reader.next()) {
      stats = accumulate(std::move(stats), dissect(record->frame), record->orig_len);
    }
  } catch (const PcapError& e) {
    return report_pcap_error(e, opt.capture, err);
  }
  out << render_report(stats, opt.format == "csv" ? ReportFormat::Delimited : ReportFormat::Text);
  return kExitOk;
}

bool kind_matches(const FrameKind& kind, std::string_view filter) {
  if (filter.empty()) return true;
  if (filter == "Invalid") return !kind.is_valid();
  return kind.name() == filter;
}

int cmd_trace(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.kind.empty() && opt.kind != "Invalid" && !FrameKind::from_name(opt.kind)) {
    err << "ethframe: unknown frame kind '" << opt.kind << "'\n";
    return kExitUsage;
  }
  std::ifstream in(opt.capture, std::ios::binary);
  if (!in) {
    err << "ethframe: cannot open " << opt.capture << '\n';
    return kExitNoInput;
  }
  try {
    PcapReader reader(in);
    std::size_t shown = 0;
    while (shown < opt.first) {
      auto record = reader.next();
      if (!record) break;
      const ByteView bytes = record->frame.bytes();
      const DissectedFrame d = dissect(bytes);
      if (!kind_matches(d.kind, opt.kind)) continue;
      out << "Frame " << reader.records_read() << " (" << record->orig_len << " bytes on wire, "
          << record->incl_len() << " captured)\n"
          << render_trace(bytes, d, decode_payload(bytes, d)) << '\n';
      ++shown;
    }
  } catch (const PcapError& e) {
    return report_pcap_error(e, opt.capture, err);
  }
  return kExitOk;
}

int cmd_generate(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto mix = parse_mix(opt.mix);
  if (!mix) {
    err << "ethframe: bad --mix '" << opt.mix << "', expected e2=N,llc=N,snap=N,novell=N\n";
    return kExitUsage;
  }
  const auto records = generate_corpus(*mix, opt.seed);
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "ethframe: cannot create " << opt.output << '\n';
    return kExitCantCreate;
  }
  try {
    const std::size_t bytes = write_pcap(records, file);
    file.flush();
    if (!file) throw Error(Errc::Io, "flush failed");
    out << "wrote " << records.size() << " frames (" << bytes << " bytes) to " << opt.output
        << " [" << to_string(*mix) << ", seed " << opt.seed << "]\n";
  } catch (const Error& e) {
    err << "ethframe: " << opt.output << ": " << e.what() << '\n';
    return kExitCantCreate;
  }
  return kExitOk;
}

int cmd_classify(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto bytes = parse_hex(opt.hex);
  if (!bytes) {
    err << "ethframe: frame must be an even-length hex string\n";
    return kExitUsage;
  }
  if (bytes->size() < kHeaderLength) {
    err << "ethframe: frame needs at least 14 bytes (28 hex digits)\n";
    return kExitUsage;
  }
  const FrameKind kind = classify(*bytes);
  const std::uint16_t t = load_be16(*bytes, kTypeOrLengthOffset);
  if (kind.is(FrameFormat::EthernetII)) {
    out << fmt::format("{} type=0x{:04x}\n", kind.name(), t);
  } else if (kind.is_valid()) {
    out << fmt::format("{} length={}\n", kind.name(), t);
  } else {
    out << fmt::format("{} field=0x{:04x}\n", kind.name(), t);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Classify, dissect and count Ethernet link-layer frame formats", "ethframe"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "Frame-format population report for a capture");
  stats->add_option("capture", opt.capture, "Classic pcap file")->required();
  stats->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "csv"}));

  auto* trace = app.add_subcommand("trace", "Per-frame text traces");
  trace->add_option("capture", opt.capture, "Classic pcap file")->required();
  trace->add_option("--first", opt.first, "Stop after N traced frames");
  trace->add_option("--kind", opt.kind,
                    "Only frames of this kind (EthernetII, Ieee8023Llc, Ieee8023Snap, NovellRaw, "
                    "Invalid or Invalid(<reason>))");

  auto* generate = app.add_subcommand("generate", "Write a synthetic capture");
  generate->add_option("output", opt.output, "Output pcap path")->required();
  generate->add_option("--mix", opt.mix, "Frame counts, e.g. e2=6318,llc=88,snap=5,novell=0")
      ->required();
  generate->add_option("--seed", opt.seed, "Random seed");

  auto* classify_cmd = app.add_subcommand("classify", "Classify one frame given as hex");
  classify_cmd->add_option("frame", opt.hex, "Frame bytes as hex")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ethframe");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (stats->parsed()) return cmd_stats(opt, out, err);
  if (trace->parsed()) return cmd_trace(opt, out, err);
  if (generate->parsed()) return cmd_generate(opt, out, err);
  return cmd_classify(opt, out, err);
}

}  // namespace ethframe::cli
