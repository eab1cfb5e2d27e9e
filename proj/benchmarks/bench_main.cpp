#include "sullivan/gottlieb.hpp"
#include "sullivan/modelfile.hpp"
#include "sullivan/splitting.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace sullivan;

namespace {

ModelDocument load(const std::string& name) {
    std::ifstream in(std::string(SULLIVAN_CORPUS_DIR) + "/" + name + ".sul");
    std::stringstream buf;
    buf << in.rdbuf();
    auto r = parse(buf.str());
    if (!r.ok()) throw std::runtime_error("fixture " + name + " failed to parse");
    return std::move(r.document);
}

std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(SULLIVAN_CORPUS_DIR) + "/" + name + ".sul");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void BM_Parse(benchmark::State& state) {
    auto text = fixture_text("ex3_5_1");
    for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_Parse);

void BM_Obstruction_SixCells(benchmark::State& state) {
    auto doc = load("ex3_2_1_n3");
    const auto& ks = doc.extensions.at("E");
    ObstructionOptions opts;
    opts.definition_cross_check = false;
    for (auto _ : state) benchmark::DoNotOptimize(obstruction_group(ks, opts));
}
BENCHMARK(BM_Obstruction_SixCells);

void BM_ObstructionWithCrossCheck(benchmark::State& state) {
    auto doc = load("ex3_3_3");
    const auto& ks = doc.extensions.at("E");
    for (auto _ : state) benchmark::DoNotOptimize(obstruction_group(ks));
}
BENCHMARK(BM_ObstructionWithCrossCheck);

void BM_SplitFourSpheres(benchmark::State& state) {
    auto doc = load("ex3_2_1_n3");
    const auto& ks = doc.extensions.at("E");
    std::vector<std::string> gens{"w3", "w4", "w5", "w6"};
    for (auto _ : state) {
        auto cert = change_of_basis(ks, gens);
        benchmark::DoNotOptimize(verify_certificate(cert));
    }
}
BENCHMARK(BM_SplitFourSpheres);

void BM_CohomologyFormalDim(benchmark::State& state) {
    auto doc = load("ex3_6_2");
    const auto& b = doc.algebras.at("B");
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(b, 20));
}
BENCHMARK(BM_CohomologyFormalDim);

void BM_DerivationSlice(benchmark::State& state) {
    auto doc = load("ex3_5_2");
    auto id = std::make_shared<Morphism>(Morphism::identity(doc.extensions.at("Xfg").total()));
    for (auto _ : state) benchmark::DoNotOptimize(complex_slice(id, 3));
}
BENCHMARK(BM_DerivationSlice);

}  // namespace

BENCHMARK_MAIN();
