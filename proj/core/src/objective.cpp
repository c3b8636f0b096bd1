#include "gmig/objective.hpp"

namespace gmig {

VqdContext VqdContext::with_default_constraints(std::size_t n_spatial) {
  VqdContext ctx;
  ctx.constraints.push_back({number_operator(n_spatial), 2.0, 1.0});
  return ctx;
}

void VqdContext::add_found_state(StateVector state, double energy,
                                 double beta) {
  found_states.push_back(std::move(state));
  found_energies.push_back(energy);
  deflation_weights.push_back(beta);
}

double trial_energy(const AnsatzSpec& spec, const ParameterVector& theta,
                    const QubitHamiltonian& h, const StateVector& reference) {
  return expectation(prepare_state(spec, theta, reference), h.pauli_sum);
}

double constraint_penalty(const StateVector& state, const VqdContext& ctx) {
  double acc = 0.0;
  for (const auto& c : ctx.constraints) {
    const double dev = expectation(state, c.observable) - c.target;
    acc += c.weight * dev * dev;
  }
  return acc;
}

double deflation_penalty(const StateVector& state, const VqdContext& ctx) {
  double acc = 0.0;
  for (std::size_t j = 0; j < ctx.found_states.size(); ++j)
    acc += ctx.deflation_weights[j] *
           inner_product_sq(state, ctx.found_states[j]);
  return acc;
}

Evaluation evaluate(const AnsatzSpec& spec, const ParameterVector& theta,
                    const QubitHamiltonian& h, const StateVector& reference,
                    const VqdContext& ctx, EvalCounter* counter) {
  const StateVector state = prepare_state(spec, theta, reference);
  Evaluation ev;
  ev.energy = expectation(state, h.pauli_sum);
  ev.constraint_penalty = constraint_penalty(state, ctx);
  ev.deflation_penalty = deflation_penalty(state, ctx);
  ev.f = ev.energy + ev.constraint_penalty + ev.deflation_penalty;
  if (counter) counter->fetch_add(1, std::memory_order_relaxed);
  return ev;
}

}  // namespace gmig
