#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gmig/chem.hpp"
#include "gmig/pauli.hpp"

namespace gmig {

using ParameterVector = Eigen::VectorXd;

enum class BlockKind { Hamiltonian, Cluster };

/// One parameterized generator group: parameter theta_l drives
/// prod_k exp(-i theta_l c_k P_k) over the generator's terms, applied in
/// lexicographic word order (PauliSum keeps its terms sorted).
struct ParamBlock {
  BlockKind kind;
  std::vector<PauliSum> generators;  // one per parameter in the block
  Eigen::VectorXd lower_bounds;
  Eigen::VectorXd upper_bounds;

  std::size_t size() const { return generators.size(); }
};

struct AnsatzSpec {
  int depth = 2;
  std::size_t qubit_count = 0;
  // Parameter layout: [hamiltonian params (one per repetition), cluster
  // params (shared across repetitions)].
  ParamBlock hamiltonian_block;
  ParamBlock cluster_block;
  bool hamiltonian_first = true;

  std::size_t parameter_count() const {
    return hamiltonian_block.size() + cluster_block.size();
  }
  std::size_t hamiltonian_param_count() const {
    return hamiltonian_block.size();
  }
  Eigen::VectorXd lower_bounds() const;
  Eigen::VectorXd upper_bounds() const;
};

/// Trotterized Hamiltonian-evolution block (one parameter per repetition)
/// plus UCCSD cluster block (2 spin-preserving singles + 1 double, shared
/// across repetitions) for the 4-qubit H2 Hamiltonian. N = depth + 3.
AnsatzSpec build_h2_ansatz(const QubitHamiltonian& h, int depth = 2,
                           bool hamiltonian_first = true);

/// HF reference determinant |1100> (qubits 0,1 occupied).
StateVector hf_reference(std::size_t qubit_count);

/// U(theta)|reference>: per repetition, Hamiltonian block then cluster
/// block (or swapped when hamiltonian_first is false), each generator
/// expanded factor-by-factor in canonical term order.
StateVector prepare_state(const AnsatzSpec& spec, const ParameterVector& theta,
                          const StateVector& reference);

/// JSON description of blocks, generators and bounds for audit.
std::string ansatz_to_json(const AnsatzSpec& spec);

}  // namespace gmig
