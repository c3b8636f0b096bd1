#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmig/ansatz.hpp"
#include "gmig/chem.hpp"
#include "gmig/ga.hpp"
#include "gmig/local_search.hpp"
#include "gmig/objective.hpp"

namespace gmig {

struct Candidate {
  Eigen::VectorXd theta_ga;
  double f_ga = 0.0;       // fitness when the GA ends
  Eigen::VectorXd theta_ls;
  double f_ls = 0.0;       // fitness when the LS ends
  bool discarded = false;  // non-finite LS outcome
  std::string note;
};

struct GmigResult {
  Eigen::VectorXd best_theta;
  double best_f = 0.0;
  double energy = 0.0;  // trial energy at best_theta (no penalties)
  StateVector state{1};
  std::vector<Candidate> candidates;
  std::size_t ga_generations = 0;
  bool ga_converged = false;
  bool candidates_padded = false;
  std::uint64_t eval_count = 0;
  double wall_seconds = 0.0;
  int winner_index = -1;
};

struct GmigConfig {
  GaConfig ga;
  LsConfig ls;
  std::size_t ls_candidates = 10;
  // Benchmark mode ranks LS endpoints by log10(|F - E_ref| / |E_ref|);
  // production mode ranks by raw F.
  bool benchmark_selector = true;
  // Excited-state runs pin the Hamiltonian-block parameters to the ground
  // run's values during the GA; LS frees them.
  bool freeze_hamiltonian_in_ga = true;
};

/// Full GA-then-LS pipeline for one state: seeded init, JGG generations to
/// convergence, LS from the 10 best individuals, selector over the LS
/// endpoints. Appends the winning state to `context`.
GmigResult gmig_vqe(std::size_t state_index, const QubitHamiltonian& h,
                    const AnsatzSpec& spec, VqdContext& context,
                    const GmigConfig& config, std::uint64_t seed,
                    std::optional<double> reference_energy = std::nullopt,
                    const std::optional<Eigen::VectorXd>&
                        ground_hamiltonian_params = std::nullopt);

/// Ordinary VQE-with-VQD: a single local search from theta = 0. Appends the
/// resulting state to `context`.
GmigResult ordinary_vqe(const QubitHamiltonian& h, const AnsatzSpec& spec,
                        VqdContext& context, const LsConfig& ls_config);

}  // namespace gmig
