#include <benchmark/benchmark.h>

#include "eqlab/factor.hpp"
#include "eqlab/resultant.hpp"
#include "eqlab/singularity.hpp"
#include "eqlab/text_io.hpp"

using namespace eqlab::algebra;
using namespace eqlab::singularity;

namespace {

const Field Q = Field::rationals();

Polynomial P3(const char* s) { return parse_polynomial(s, {"x", "y", "z"}, Q); }

void BM_Resultant(benchmark::State& state) {
    const Polynomial f = P3("x^4 + 3*x^2*y*z - y^4 + 2*x*z^3 - z^4");
    const Polynomial fx = differentiate(f, 0);
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, fx, 0));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMillisecond);

void BM_FactorOverQ(benchmark::State& state) {
    // (s^3 - 2)(s^4 + s + 1)(s^2 + 5)^2 expanded through the polynomial parser
    const UPoly a = UPoly::from_polynomial(
        parse_polynomial("(s^3 - 2)*(s^4 + s + 1)*(s^2 + 5)^2", {"s"}, Q), 0);
    for (auto _ : state) benchmark::DoNotOptimize(factor(a));
}
BENCHMARK(BM_FactorOverQ)->Unit(benchmark::kMillisecond);

void BM_MilnorNumber(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    const Polynomial g = linear_change(normal_form(SingularityClass::a(k)), Matrix::from_ints(Q, 2, 2, std::vector<long>{2, 1, -1, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(milnor_number(CurveGerm(g)));
}
BENCHMARK(BM_MilnorNumber)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TjurinaNumber(benchmark::State& state) {
    const Polynomial g = parse_polynomial("x^4 + y^5 + x^2*y^3", {"x", "y"}, Q);
    for (auto _ : state) benchmark::DoNotOptimize(tjurina_number(CurveGerm(g)));
}
BENCHMARK(BM_TjurinaNumber)->Unit(benchmark::kMillisecond);

void BM_DualCurve(benchmark::State& state) {
    const Polynomial f = state.range(0) == 3 ? P3("x^3 + y^3 + z^3") : P3("x^4 + y^4 + z^4 + x*y*z^2");
    for (auto _ : state) benchmark::DoNotOptimize(dual_curve(f));
}
BENCHMARK(BM_DualCurve)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SingularLocusSextic(benchmark::State& state) {
    const Polynomial sextic = dual_curve(P3("x^3 + y^3 + z^3"));
    for (auto _ : state) benchmark::DoNotOptimize(singular_locus(sextic));
}
BENCHMARK(BM_SingularLocusSextic)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
