#include "gmig/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gmig {

double sample_f_ini(Rng& rng) {
  // Beta(a,b) via two gamma draws.
  std::gamma_distribution<double> ga(0.99, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double x = ga(rng);
  const double y = ga(rng);
  const double beta = x / (x + y);
  return beta + 0.001 * uniform(rng);
}

namespace {

void pin_frozen(Eigen::VectorXd& theta, const std::optional<FreezeMask>& fz) {
  if (!fz) return;
  for (Eigen::Index k = 0; k < theta.size(); ++k)
    if (fz->frozen[static_cast<std::size_t>(k)])
      theta[k] = fz->frozen_values[k];
}

}  // namespace

Population ga_init(const GaConfig& config, const Eigen::VectorXd& lower,
                   const Eigen::VectorXd& upper, Rng& rng,
                   const std::optional<FreezeMask>& freeze) {
  const Eigen::Index n = static_cast<Eigen::Index>(config.n_params);
  if (lower.size() != n || upper.size() != n)
    throw std::invalid_argument("bounds length mismatch");
  if (((upper - lower).array() <= 0.0).any())
    throw std::invalid_argument("nonpositive parameter range");

  Population pop;
  pop.members.resize(config.population_size());
  for (auto& ind : pop.members) {
    ind.theta.resize(n);
    for (Eigen::Index k = 0; k < n; ++k)
      ind.theta[k] = (upper[k] - lower[k]) * sample_f_ini(rng) + lower[k];
    pin_frozen(ind.theta, freeze);
    ind.generation = 0;
  }
  return pop;
}

std::vector<Eigen::VectorXd> rex_crossover(
    const std::vector<Eigen::VectorXd>& parents, const GaConfig& config,
    Rng& rng, const std::optional<FreezeMask>& freeze) {
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(parents.front().size());
  for (const auto& p : parents) mean += p;
  mean /= static_cast<double>(parents.size());

  std::normal_distribution<double> xi(0.0, config.xi_stddev());
  std::vector<Eigen::VectorXd> children;
  children.reserve(config.n_children);
  for (std::size_t c = 0; c < config.n_children; ++c) {
    Eigen::VectorXd child = mean;
    for (const auto& p : parents) child += xi(rng) * (p - mean);
    pin_frozen(child, freeze);
    children.push_back(std::move(child));
  }
  return children;
}

void jgg_step(Population& population, const GaConfig& config,
              const ObjectiveFn& objective, Rng& rng,
              const std::optional<FreezeMask>& freeze) {
  const std::size_t pop_size = population.members.size();
  if (pop_size < config.n_parents)
    throw std::invalid_argument("population smaller than N_p");

  // Draft N_p parent slots uniformly without replacement.
  std::vector<std::size_t> slots;
  while (slots.size() < config.n_parents) {
    std::uniform_int_distribution<std::size_t> pick(0, pop_size - 1);
    const std::size_t s = pick(rng);
    if (std::find(slots.begin(), slots.end(), s) == slots.end())
      slots.push_back(s);
  }

  std::vector<Eigen::VectorXd> parents;
  for (std::size_t s : slots) parents.push_back(population.members[s].theta);

  auto children = rex_crossover(parents, config, rng, freeze);
  std::vector<Individual> family;
  family.reserve(children.size());
  for (auto& c : children) {
    Individual ind;
    ind.fitness = objective(c);
    ind.theta = std::move(c);
    ind.generation = population.generation + 1;
    family.push_back(std::move(ind));
  }
  std::stable_sort(family.begin(), family.end(),
                   [](const Individual& a, const Individual& b) {
                     return a.fitness < b.fitness;
                   });
  for (std::size_t i = 0; i < slots.size(); ++i)
    population.members[slots[i]] = std::move(family[i]);
  ++population.generation;
}

bool ga_converged(const Population& population, const GaConfig& config,
                  const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
  const std::size_t n_pop = population.members.size();
  const Eigen::Index n = lower.size();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  for (const auto& ind : population.members) mean += ind.theta;
  mean /= static_cast<double>(n_pop);

  double worst = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double sigma_k = 0.0;
    for (const auto& ind : population.members) {
      const double d = ind.theta[k] - mean[k];
      sigma_k += d * d;
    }
    sigma_k /= static_cast<double>(n_pop);
    worst = std::max(worst, sigma_k / (upper[k] - lower[k]));
  }
  return worst < config.convergence_threshold;
}

std::vector<std::size_t> best_distinct(const Population& population,
                                       std::size_t count, bool* padded) {
  std::vector<std::size_t> order(population.members.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return population.members[a].fitness <
                            population.members[b].fitness;
                   });
  std::vector<std::size_t> chosen;
  for (std::size_t idx : order) {
    if (chosen.size() == count) break;
    const auto& t = population.members[idx].theta;
    bool dup = false;
    for (std::size_t c : chosen)
      if (population.members[c].theta == t) {
        dup = true;
        break;
      }
    if (!dup) chosen.push_back(idx);
  }
  bool pad = chosen.size() < count;
  for (std::size_t i = 0; !order.empty() && chosen.size() < count; ++i)
    chosen.push_back(order[i % order.size()]);
  if (padded) *padded = pad;
  return chosen;
}

}  // namespace gmig
