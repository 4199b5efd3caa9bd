#include <benchmark/benchmark.h>

#include "rlnc/analysis.hpp"
#include "rlnc/codec.hpp"
#include "rlnc/gf.hpp"
#include "rlnc/optimizer.hpp"
#include "rlnc/simulator.hpp"

namespace {

rlnc::LinkParameters geo_link(double pe) {
  return rlnc::LinkParameters(1.5e6, 0.125, 1.0, pe, 0.0);
}
rlnc::CodingParameters geo_coding(int m, int g = 20) {
  return rlnc::CodingParameters(m, 10000, 80, g, 100);
}

void BM_FieldMul(benchmark::State& state) {
  const rlnc::FieldSpec field =
      rlnc::FieldSpec::standard(static_cast<int>(state.range(0)));
  rlnc::Symbol a = 3, b = 7;
  for (auto _ : state) {
    a = field.mul(a, b) | 1;
    b = field.mul(b, a) | 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(10)->Arg(16);

void BM_DecoderReceive(benchmark::State& state) {
  const rlnc::FieldSpec field = rlnc::FieldSpec::standard(10);
  const int m = static_cast<int>(state.range(0));
  rlnc::SplitMix64 rng(1);
  for (auto _ : state) {
    rlnc::DecoderState decoder(field, m, 0);
    while (!decoder.complete()) {
      rlnc::CodedPacket pkt;
      pkt.coefficients.resize(m);
      for (auto& c : pkt.coefficients) {
        c = static_cast<rlnc::Symbol>(rng.next_bits(10));
      }
      decoder.receive(pkt);
    }
    benchmark::DoNotOptimize(decoder.rank());
  }
}
BENCHMARK(BM_DecoderReceive)->Arg(10)->Arg(64);

void BM_ExpectedEnergy(benchmark::State& state) {
  const auto link = geo_link(0.5);
  const int m = static_cast<int>(state.range(0));
  const auto coding = geo_coding(m);
  const auto policy = rlnc::optimize_energy(link, coding).policy;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlnc::expected_energy(policy, link, coding));
  }
}
BENCHMARK(BM_ExpectedEnergy)->Arg(10)->Arg(32);

void BM_OptimizeEnergy(benchmark::State& state) {
  const auto link = geo_link(0.8);
  const auto coding = geo_coding(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlnc::optimize_energy(link, coding).objective);
  }
}
BENCHMARK(BM_OptimizeEnergy)->Arg(10)->Arg(32);

void BM_RunTrials(benchmark::State& state) {
  const auto link = geo_link(0.5);
  const auto coding = geo_coding(10);
  const auto policy = rlnc::optimize_energy(link, coding).policy;
  rlnc::SimulationConfig config{state.range(0), 99,
                                rlnc::SimulationMode::ModelFaithful};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rlnc::run_trials(policy, link, coding, config).mean_energy);
  }
}
BENCHMARK(BM_RunTrials)->Arg(1000)->Arg(10000);

void BM_RunTrialsSymbolLevel(benchmark::State& state) {
  const auto link = geo_link(0.5);
  const auto coding = geo_coding(10, 10);
  const auto policy = rlnc::optimize_energy(link, coding).policy;
  rlnc::SimulationConfig config{state.range(0), 99,
                                rlnc::SimulationMode::SymbolLevel};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rlnc::run_trials(policy, link, coding, config).mean_energy);
  }
}
BENCHMARK(BM_RunTrialsSymbolLevel)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
