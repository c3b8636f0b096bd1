#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace gmig {

using Rng = std::mt19937_64;

/// Coordinates pinned to fixed values during the GA (Hamiltonian-block
/// freeze for excited-state runs).
struct FreezeMask {
  std::vector<bool> frozen;       // per coordinate
  Eigen::VectorXd frozen_values;  // used where frozen[k] is true
};

struct GaConfig {
  std::size_t n_params = 0;
  std::size_t n_parents = 2;         // N_p
  std::size_t n_children = 4;        // N_c
  double xi_stddev_scale = 0.9;      // xi ~ Normal(0, scale/sqrt(N_p))
  double convergence_threshold = 1e-16;
  std::size_t max_generations = 300;

  std::size_t population_size() const { return 10 * n_params; }
  double xi_stddev() const {
    return xi_stddev_scale / std::sqrt(static_cast<double>(n_parents));
  }
};

struct Individual {
  Eigen::VectorXd theta;
  double fitness = 0.0;
  std::size_t generation = 0;
};

struct Population {
  std::vector<Individual> members;
  std::size_t generation = 0;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;

/// Initialization function f_ini = Beta(0.99, 0.99) + 0.001 * Uniform[0,1];
/// support [0, 1.001], so initial values may overshoot the upper bound.
double sample_f_ini(Rng& rng);

/// 10N individuals with theta_j = (UB_j - LB_j) * f_ini + LB_j per
/// coordinate; frozen coordinates take their pinned values. Fitness is not
/// evaluated here.
Population ga_init(const GaConfig& config, const Eigen::VectorXd& lower,
                   const Eigen::VectorXd& upper, Rng& rng,
                   const std::optional<FreezeMask>& freeze = std::nullopt);

/// REX: child = parent mean + sum_j xi_j (parent_j - mean), fresh
/// xi_j ~ Normal(0, 0.9/sqrt(N_p)) per child per parent. No clipping.
std::vector<Eigen::VectorXd> rex_crossover(
    const std::vector<Eigen::VectorXd>& parents, const GaConfig& config,
    Rng& rng, const std::optional<FreezeMask>& freeze = std::nullopt);

/// One JGG generation: draft N_p parents uniformly without replacement,
/// make N_c children by REX, evaluate them, put the N_p best children back
/// in the drafted slots. Everyone else is untouched.
void jgg_step(Population& population, const GaConfig& config,
              const ObjectiveFn& objective, Rng& rng,
              const std::optional<FreezeMask>& freeze = std::nullopt);

/// Per-coordinate sigma_k = sum_j (theta_kj - mean_k)^2 / 10N; converged
/// when max_k sigma_k / (UB_k - LB_k) < threshold.
bool ga_converged(const Population& population, const GaConfig& config,
                  const Eigen::VectorXd& lower, const Eigen::VectorXd& upper);

/// Indices of the `count` lowest-fitness members, preferring distinct theta
/// vectors; pads with best available when fewer distinct ones exist.
/// Sets `padded` when padding happened.
std::vector<std::size_t> best_distinct(const Population& population,
                                       std::size_t count, bool* padded);

}  // namespace gmig
