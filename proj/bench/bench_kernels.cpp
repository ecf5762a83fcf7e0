// Serial reference vs OpenMP paths of the data-parallel kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "gradix/corpus.hpp"
#include "gradix/kernels.hpp"
#include "gradix/parser.hpp"
#include "gradix/reduc.hpp"

using namespace gradix;

namespace {

struct Workload {
  Ideal ideal;
  std::vector<Polynomial> inputs;
  std::vector<Monomial> monomials;
};

const Workload& workload() {
  static const Workload w = [] {
    auto ring = parse_document("ring GF(32003)[x,y,z];").ring;
    Ideal i(ring, {parse_polynomial(ring, "x^7+y^3*z^2"), parse_polynomial(ring, "y^7-x^2*z^3"),
                   parse_polynomial(ring, "z^7+x*y^5"), parse_polynomial(ring, "x^3*y^3*z")});
    std::vector<Polynomial> inputs;
    std::vector<Monomial> monomials;
    const Polynomial base = parse_polynomial(ring, "x+2*y-3*z+5");
    for (std::uint32_t a = 0; a < 12; ++a) {
      for (std::uint32_t b = 0; b < 12; ++b) {
        const Monomial m = Monomial::variable(0, a) * Monomial::variable(1, b) * Monomial::variable(2, (a * b) % 9);
        monomials.push_back(m);
        inputs.push_back(Polynomial::term(ring, m, ring->field().one()) * base.pow((a + b) % 6 + 2));
      }
    }
    return Workload{i, std::move(inputs), std::move(monomials)};
  }();
  return w;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_batch_normal_forms(benchmark::State& state) {
  const Workload& w = workload();
  const GroebnerBasis& gb = w.ideal.basis();
  for (auto _ : state) benchmark::DoNotOptimize(batch_normal_forms(gb, w.inputs, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(w.inputs.size()));
  label(state);
}

void BM_monomial_normal_forms(benchmark::State& state) {
  const Workload& w = workload();
  const GroebnerBasis& gb = w.ideal.basis();
  for (auto _ : state) benchmark::DoNotOptimize(monomial_normal_forms(gb, w.monomials, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(w.monomials.size()));
  label(state);
}

void BM_verify_equivalence(benchmark::State& state) {
  const auto corpus = random_graded_corpus(60, kDefaultSeed);
  for (auto _ : state) {
    // fresh copies so the per-ideal basis memo is not reused between runs
    std::vector<Ideal> fresh;
    for (const auto& i : corpus) fresh.emplace_back(i.ring(), i.generators());
    benchmark::DoNotOptimize(verify_equivalence(fresh, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus.size()));
  label(state);
}

}  // namespace

BENCHMARK(BM_batch_normal_forms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_monomial_normal_forms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_verify_equivalence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
