#include <sstream>

#include <benchmark/benchmark.h>

#include "ethframe/classifier.hpp"
#include "ethframe/corpus.hpp"
#include "ethframe/dissector.hpp"
#include "ethframe/pcap_io.hpp"
#include "ethframe/stats.hpp"
#include "ethframe/trace_renderer.hpp"

namespace {

using namespace ethframe;

const std::vector<PcapRecord>& corpus() {
  static const auto records = generate_corpus(FrameMix{6318, 88, 5, 40}, 1);
  return records;
}

void BM_Classify(benchmark::State& state) {
  const auto& records = corpus();
  for (auto _ : state) {
    for (const auto& r : records) benchmark::DoNotOptimize(classify(r.frame));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_Classify);

void BM_Dissect(benchmark::State& state) {
  const auto& records = corpus();
  for (auto _ : state) {
    for (const auto& r : records) benchmark::DoNotOptimize(dissect(r.frame.bytes()));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_Dissect);

void BM_RenderTrace(benchmark::State& state) {
  const auto& records = corpus();
  for (auto _ : state) {
    for (std::size_t i = 0; i < 256; ++i) {
      benchmark::DoNotOptimize(render_trace(records[i].frame.bytes()));
    }
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_RenderTrace);

void BM_PcapWrite(benchmark::State& state) {
  const auto& records = corpus();
  for (auto _ : state) {
    std::ostringstream out;
    write_pcap(records, out);
    benchmark::DoNotOptimize(out.str().size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_PcapWrite);

void BM_PcapRead(benchmark::State& state) {
  std::ostringstream out;
  write_pcap(corpus(), out);
  const std::string file = out.str();
  for (auto _ : state) {
    std::istringstream in(file);
    benchmark::DoNotOptimize(read_pcap(in));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(file.size()));
}
BENCHMARK(BM_PcapRead);

void BM_StatsAccumulate(benchmark::State& state) {
  const auto& records = corpus();
  for (auto _ : state) {
    CaptureStats stats;
    for (const auto& r : records) stats.add(classify(r.frame), r.frame.size());
    benchmark::DoNotOptimize(percent_tenths(stats));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(records.size()));
}
BENCHMARK(BM_StatsAccumulate);

}  // namespace

BENCHMARK_MAIN();
