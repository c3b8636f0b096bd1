#include "gmig/gmig.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmig {

namespace {

double selector_score(double f, std::optional<double> e_ref) {
  if (!e_ref) return f;
  // Sign-safe relative-error selector: log10(|F - E| / |E|).
  const double rel = std::abs(f - *e_ref) / std::abs(*e_ref);
  return std::log10(std::max(rel, 1e-300));
}

}  // namespace

GmigResult gmig_vqe(std::size_t state_index, const QubitHamiltonian& h,
                    const AnsatzSpec& spec, VqdContext& context,
                    const GmigConfig& config, std::uint64_t seed,
                    std::optional<double> reference_energy,
                    const std::optional<Eigen::VectorXd>&
                        ground_hamiltonian_params) {
  if (state_index >= 1 && context.found_states.size() != state_index)
    throw std::invalid_argument(
        "context must hold exactly the states below state_index");

  const auto start = std::chrono::steady_clock::now();
  EvalCounter evals{0};
  const StateVector reference = hf_reference(spec.qubit_count);
  auto objective = [&](const Eigen::VectorXd& theta) {
    return evaluate(spec, theta, h, reference, context, &evals).f;
  };

  GaConfig ga_cfg = config.ga;
  ga_cfg.n_params = spec.parameter_count();
  const Eigen::VectorXd lower = spec.lower_bounds();
  const Eigen::VectorXd upper = spec.upper_bounds();

  std::optional<FreezeMask> freeze;
  if (state_index >= 1 && config.freeze_hamiltonian_in_ga) {
    if (!ground_hamiltonian_params)
      throw std::invalid_argument(
          "excited-state run requires the ground Hamiltonian parameters");
    FreezeMask mask;
    mask.frozen.assign(ga_cfg.n_params, false);
    mask.frozen_values = Eigen::VectorXd::Zero(
        static_cast<Eigen::Index>(ga_cfg.n_params));
    for (std::size_t k = 0; k < spec.hamiltonian_param_count(); ++k) {
      mask.frozen[k] = true;
      mask.frozen_values[static_cast<Eigen::Index>(k)] =
          (*ground_hamiltonian_params)[static_cast<Eigen::Index>(k)];
    }
    freeze = std::move(mask);
  }

  Rng rng(seed);
  Population pop = ga_init(ga_cfg, lower, upper, rng, freeze);
  for (auto& ind : pop.members) ind.fitness = objective(ind.theta);

  GmigResult res;
  while (pop.generation < ga_cfg.max_generations) {
    if (ga_converged(pop, ga_cfg, lower, upper)) {
      res.ga_converged = true;
      break;
    }
    jgg_step(pop, ga_cfg, objective, rng, freeze);
  }
  res.ga_generations = pop.generation;

  const auto chosen =
      best_distinct(pop, config.ls_candidates, &res.candidates_padded);

  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t ci = 0; ci < chosen.size(); ++ci) {
    const Individual& ind = pop.members[chosen[ci]];
    Candidate cand;
    cand.theta_ga = ind.theta;
    cand.f_ga = ind.fitness;
    try {
      const OptResult ls =
          local_search(config.ls.method, objective, ind.theta, config.ls);
      cand.theta_ls = ls.best_theta;
      cand.f_ls = ls.best_f;
      if (!std::isfinite(cand.f_ls)) {
        cand.discarded = true;
        cand.note = "non-finite LS endpoint";
      }
    } catch (const std::exception& e) {
      cand.discarded = true;
      cand.note = e.what();
    }
    if (!cand.discarded) {
      const double score = selector_score(
          cand.f_ls,
          config.benchmark_selector ? reference_energy : std::nullopt);
      if (score < best_score) {
        best_score = score;
        res.winner_index = static_cast<int>(ci);
      }
    }
    res.candidates.push_back(std::move(cand));
  }
  if (res.winner_index < 0)
    throw std::runtime_error("all LS candidates diverged");

  const Candidate& winner = res.candidates[res.winner_index];
  res.best_theta = winner.theta_ls;
  res.best_f = winner.f_ls;
  res.state = prepare_state(spec, res.best_theta, reference);
  res.energy = expectation(res.state, h.pauli_sum);
  res.eval_count = evals.load();
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  context.add_found_state(res.state, res.energy);
  return res;
}

GmigResult ordinary_vqe(const QubitHamiltonian& h, const AnsatzSpec& spec,
                        VqdContext& context, const LsConfig& ls_config) {
  const auto start = std::chrono::steady_clock::now();
  EvalCounter evals{0};
  const StateVector reference = hf_reference(spec.qubit_count);
  auto objective = [&](const Eigen::VectorXd& theta) {
    return evaluate(spec, theta, h, reference, context, &evals).f;
  };
  const Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(
      static_cast<Eigen::Index>(spec.parameter_count()));
  const OptResult ls =
      local_search(ls_config.method, objective, theta0, ls_config);

  GmigResult res;
  res.best_theta = ls.best_theta;
  res.best_f = ls.best_f;
  res.state = prepare_state(spec, res.best_theta, reference);
  res.energy = expectation(res.state, h.pauli_sum);
  res.winner_index = 0;
  Candidate cand;
  cand.theta_ga = theta0;
  cand.f_ga = objective(theta0);
  cand.theta_ls = ls.best_theta;
  cand.f_ls = ls.best_f;
  res.candidates.push_back(std::move(cand));
  res.eval_count = evals.load();
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  context.add_found_state(res.state, res.energy);
  return res;
}

}  // namespace gmig
