#include "pineta/dsl.hpp"

#include <benchmark/benchmark.h>

using namespace pineta;

static void BM_parse_presentation(benchmark::State& state) {
    const std::string src =
        "generators: u:2, v:2\nrelations: u^2 + u*v, v^2 + 2*u*v\norientation: u^2\n";
    for (auto _ : state) benchmark::DoNotOptimize(parse_presentation(src));
}
BENCHMARK(BM_parse_presentation);

static void BM_square_and_pair(benchmark::State& state) {
    PresentationPtr p = builtin_presentation(kCaseIPresentation);
    RingElement u = RingElement::generator(p, "u");
    RingElement v = RingElement::generator(p, "v");
    RingElement c = Rational(-2) * u + v;
    for (auto _ : state) benchmark::DoNotOptimize(pair_fundamental(c * c));
}
BENCHMARK(BM_square_and_pair);

static void BM_eval_expression(benchmark::State& state) {
    PresentationPtr p = builtin_presentation(kCaseIIPresentation);
    for (auto _ : state) benchmark::DoNotOptimize(parse_element(p, "(-4*u + v)^2"));
}
BENCHMARK(BM_eval_expression);
