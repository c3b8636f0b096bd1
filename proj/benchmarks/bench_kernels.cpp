#include <benchmark/benchmark.h>

#include <random>

#include "gmig/ansatz.hpp"
#include "gmig/objective.hpp"

namespace {

using namespace gmig;

struct Fixture {
  MolecularIntegrals ints = sto3g_integrals(Geometry::h2(0.7414));
  RhfResult hf = rhf(ints);
  QubitHamiltonian h = qubit_hamiltonian(ints, hf.mo_coefficients);
  AnsatzSpec spec = build_h2_ansatz(h);
  StateVector ref = hf_reference(4);
};

const Fixture& fixture() {
  static Fixture fx;
  return fx;
}

void BM_PrepareState(benchmark::State& state) {
  const auto& fx = fixture();
  Eigen::VectorXd theta(5);
  theta << 0.3, -0.2, 0.1, 0.4, -0.7;
  for (auto _ : state) {
    auto psi = prepare_state(fx.spec, theta, fx.ref);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_PrepareState);

void BM_Expectation(benchmark::State& state) {
  const auto& fx = fixture();
  Eigen::VectorXd theta(5);
  theta << 0.3, -0.2, 0.1, 0.4, -0.7;
  const auto psi = prepare_state(fx.spec, theta, fx.ref);
  for (auto _ : state)
    benchmark::DoNotOptimize(expectation(psi, fx.h.pauli_sum));
}
BENCHMARK(BM_Expectation);

void BM_Evaluate(benchmark::State& state) {
  const auto& fx = fixture();
  VqdContext ctx = VqdContext::with_default_constraints(2);
  ctx.add_found_state(fx.ref, -1.1);
  Eigen::VectorXd theta(5);
  theta << 0.3, -0.2, 0.1, 0.4, -0.7;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        evaluate(fx.spec, theta, fx.h, fx.ref, ctx).f);
}
BENCHMARK(BM_Evaluate);

void BM_ApplyExponential(benchmark::State& state) {
  const auto n_qubits = static_cast<std::size_t>(state.range(0));
  StateVector psi = StateVector::basis_state(n_qubits, 0);
  PauliWord word(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q)
    word.set(q, q % 2 ? Axis::X : Axis::Z);
  for (auto _ : state) {
    apply_exponential_inplace(psi, 0.1, 1.0, word);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_ApplyExponential)->Arg(4)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
