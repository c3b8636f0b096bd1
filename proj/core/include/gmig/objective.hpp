#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "gmig/ansatz.hpp"
#include "gmig/chem.hpp"
#include "gmig/pauli.hpp"

namespace gmig {

struct Constraint {
  PauliSum observable;
  double target;
  double weight;
};

/// Deflation context threaded through a VQD run: states already found,
/// their energies, the per-state deflation weights and the penalty
/// constraints. Frozen while one state is being optimized.
struct VqdContext {
  std::vector<StateVector> found_states;
  std::vector<double> found_energies;
  std::vector<double> deflation_weights;  // beta_j, Hartree
  std::vector<Constraint> constraints;

  /// Particle-number constraint <N> = 2 with unit weight.
  static VqdContext with_default_constraints(std::size_t n_spatial);

  void add_found_state(StateVector state, double energy, double beta = 5.0);
};

struct Evaluation {
  double f = 0.0;
  double energy = 0.0;
  double constraint_penalty = 0.0;
  double deflation_penalty = 0.0;
};

/// E(theta) = <psi(theta)|H|psi(theta)> with |psi> from prepare_state.
double trial_energy(const AnsatzSpec& spec, const ParameterVector& theta,
                    const QubitHamiltonian& h, const StateVector& reference);

/// Sum over constraints of weight * (<O> - target)^2.
double constraint_penalty(const StateVector& state, const VqdContext& ctx);

/// Sum over found states of beta_j * |<psi|psi_j>|^2.
double deflation_penalty(const StateVector& state, const VqdContext& ctx);

/// Counts objective evaluations; shared across concurrent callers.
using EvalCounter = std::atomic<std::uint64_t>;

Evaluation evaluate(const AnsatzSpec& spec, const ParameterVector& theta,
                    const QubitHamiltonian& h, const StateVector& reference,
                    const VqdContext& ctx, EvalCounter* counter = nullptr);

}  // namespace gmig
