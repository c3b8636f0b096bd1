#include "gmig/ansatz.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmig {

Eigen::VectorXd AnsatzSpec::lower_bounds() const {
  Eigen::VectorXd lb(parameter_count());
  lb << hamiltonian_block.lower_bounds, cluster_block.lower_bounds;
  return lb;
}

Eigen::VectorXd AnsatzSpec::upper_bounds() const {
  Eigen::VectorXd ub(parameter_count());
  ub << hamiltonian_block.upper_bounds, cluster_block.upper_bounds;
  return ub;
}

namespace {

// Hermitian generator i(T - T+) of a single excitation q_from -> q_to.
PauliSum single_excitation_generator(std::size_t from, std::size_t to,
                                     std::size_t n_qubits) {
  ComplexPauliSum t = jw_ladder(to, true, n_qubits) *
                      jw_ladder(from, false, n_qubits);
  ComplexPauliSum tdag = jw_ladder(from, true, n_qubits) *
                         jw_ladder(to, false, n_qubits);
  t -= tdag;
  t *= cplx(0.0, 1.0);
  t.prune();
  return t.to_real();
}

PauliSum double_excitation_generator(std::size_t n_qubits) {
  // a2+ a3+ a1 a0 - h.c. for 2 electrons in 4 spin orbitals.
  ComplexPauliSum t = jw_ladder(2, true, n_qubits) *
                      jw_ladder(3, true, n_qubits) *
                      jw_ladder(1, false, n_qubits) *
                      jw_ladder(0, false, n_qubits);
  ComplexPauliSum tdag = jw_ladder(0, true, n_qubits) *
                         jw_ladder(1, true, n_qubits) *
                         jw_ladder(3, false, n_qubits) *
                         jw_ladder(2, false, n_qubits);
  t -= tdag;
  t *= cplx(0.0, 1.0);
  t.prune();
  return t.to_real();
}

Eigen::VectorXd constant_vec(std::size_t n, double v) {
  return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), v);
}

}  // namespace

AnsatzSpec build_h2_ansatz(const QubitHamiltonian& h, int depth,
                           bool hamiltonian_first) {
  if (h.qubit_count != 4)
    throw std::invalid_argument("ansatz supports the 4-qubit H2 system only");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");

  constexpr double kBound = 2.0 * std::numbers::pi;
  AnsatzSpec spec;
  spec.depth = depth;
  spec.qubit_count = 4;
  spec.hamiltonian_first = hamiltonian_first;

  spec.hamiltonian_block.kind = BlockKind::Hamiltonian;
  const PauliSum evo = h.pauli_sum.without_identity();
  for (int rep = 0; rep < depth; ++rep)
    spec.hamiltonian_block.generators.push_back(evo);
  spec.hamiltonian_block.lower_bounds = constant_vec(depth, -kBound);
  spec.hamiltonian_block.upper_bounds = constant_vec(depth, kBound);

  spec.cluster_block.kind = BlockKind::Cluster;
  spec.cluster_block.generators = {
      single_excitation_generator(0, 2, 4),  // up-spin single
      single_excitation_generator(1, 3, 4),  // down-spin single
      double_excitation_generator(4),
  };
  spec.cluster_block.lower_bounds = constant_vec(3, -kBound);
  spec.cluster_block.upper_bounds = constant_vec(3, kBound);
  return spec;
}

StateVector hf_reference(std::size_t qubit_count) {
  return StateVector::basis_state(qubit_count, 0b11);
}

namespace {

void apply_generator(StateVector& state, double theta, const PauliSum& gen) {
  for (const auto& term : gen.terms())
    apply_exponential_inplace(state, theta, term.coeff, term.word);
}

}  // namespace

StateVector prepare_state(const AnsatzSpec& spec, const ParameterVector& theta,
                          const StateVector& reference) {
  if (static_cast<std::size_t>(theta.size()) != spec.parameter_count())
    throw std::invalid_argument("parameter vector length mismatch");
  if (reference.qubit_count() != spec.qubit_count)
    throw std::invalid_argument("reference qubit count mismatch");

  StateVector state = reference;
  const std::size_t n_ham = spec.hamiltonian_block.size();
  for (int rep = 0; rep < spec.depth; ++rep) {
    auto apply_ham = [&] {
      apply_generator(state, theta[rep],
                      spec.hamiltonian_block.generators[rep]);
    };
    auto apply_cluster = [&] {
      for (std::size_t j = 0; j < spec.cluster_block.size(); ++j)
        apply_generator(state, theta[static_cast<Eigen::Index>(n_ham + j)],
                        spec.cluster_block.generators[j]);
    };
    if (spec.hamiltonian_first) {
      apply_ham();
      apply_cluster();
    } else {
      apply_cluster();
      apply_ham();
    }
  }
  return state;
}

std::string ansatz_to_json(const AnsatzSpec& spec) {
  auto block_json = [](const ParamBlock& b) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : b.generators) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : g.terms())
        terms.push_back({{"coeff", t.coeff}, {"pauli", t.word.str()}});
      gens.push_back(terms);
    }
    return nlohmann::json{
        {"kind", b.kind == BlockKind::Hamiltonian ? "hamiltonian" : "cluster"},
        {"generators", gens},
        {"lower_bounds", std::vector<double>(b.lower_bounds.begin(),
                                             b.lower_bounds.end())},
        {"upper_bounds", std::vector<double>(b.upper_bounds.begin(),
                                             b.upper_bounds.end())}};
  };
  nlohmann::json j{{"depth", spec.depth},
                   {"qubit_count", spec.qubit_count},
                   {"hamiltonian_first", spec.hamiltonian_first},
                   {"hamiltonian_block", block_json(spec.hamiltonian_block)},
                   {"cluster_block", block_json(spec.cluster_block)}};
  return j.dump(2);
}

}  // namespace gmig
