#include "tscflp/evaluator.hpp"

#include <cmath>
#include <string>

#include "tscflp/errors.hpp"

namespace tscflp {

Units fixed_cost(const Instance& inst, const Individual& ind) {
  Units total = 0;
  for (std::size_t i = 0; i < inst.n_plants(); ++i)
    if (ind.y[i]) total += inst.plant_fixed_cost[i];
  for (std::size_t j = 0; j < inst.n_depots(); ++j)
    if (ind.z[j]) total += inst.depot_fixed_cost[j];
  return total;
}

EvaluatedSolution evaluate_exact(const Instance& inst, const Individual& ind) {
  if (ind.y.size() != inst.n_plants() || ind.z.size() != inst.n_depots())
    throw std::invalid_argument("individual size does not match instance");
  const Units demand = inst.total_demand();
  if (const Units cap = open_plant_capacity(inst, ind); cap < demand)
    throw InfeasibleError("plant", "open plant capacity " + std::to_string(cap) +
                                       " is short of demand " + std::to_string(demand));
  if (const Units cap = open_depot_capacity(inst, ind); cap < demand)
    throw InfeasibleError("depot", "open depot capacity " + std::to_string(cap) +
                                       " is short of demand " + std::to_string(demand));

  EvaluatedSolution out;
  out.individual = ind;
  out.network = build_network(inst, ind);
  out.flows = min_cost_flow(out.network);
  out.fixed_cost = fixed_cost(inst, ind);
  out.objective_exact = out.fixed_cost + out.flows.cost;
  out.objective = static_cast<double>(out.objective_exact);
  return out;
}

LpRelaxation lp_relaxation(const Instance& inst) {
  const std::size_t ni = inst.n_plants(), nj = inst.n_depots(), nk = inst.n_customers();
  LayeredNetworkT<double> net;
  net.plant_caps = inst.plant_capacity;
  net.depot_caps = inst.depot_capacity;
  net.demand = inst.demand;
  for (std::size_t i = 0; i < ni; ++i) {
    net.plant_ids.push_back(i);
    net.plant_unit_cost.push_back(static_cast<double>(inst.plant_fixed_cost[i]) /
                                  static_cast<double>(inst.plant_capacity[i]));
  }
  for (std::size_t j = 0; j < nj; ++j) {
    net.depot_ids.push_back(j);
    net.depot_unit_cost.push_back(static_cast<double>(inst.depot_fixed_cost[j]) /
                                  static_cast<double>(inst.depot_capacity[j]));
  }
  net.c.reserve(ni * nj);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) net.c.push_back(static_cast<double>(inst.plant_depot_cost(i, j)));
  net.d.reserve(nj * nk);
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t k = 0; k < nk; ++k)
      net.d.push_back(static_cast<double>(inst.depot_customer_cost(j, k)));

  const auto plan = min_cost_flow(net);

  LpRelaxation out;
  out.bound = plan.cost;
  out.y.assign(ni, 0.0);
  out.z.assign(nj, 0.0);
  for (std::size_t i = 0; i < ni; ++i) {
    Units flow = 0;
    for (std::size_t j = 0; j < nj; ++j) flow += plan.x(i, j);
    out.y[i] = static_cast<double>(flow) / static_cast<double>(inst.plant_capacity[i]);
  }
  for (std::size_t j = 0; j < nj; ++j) {
    Units flow = 0;
    for (std::size_t k = 0; k < nk; ++k) flow += plan.s(j, k);
    out.z[j] = static_cast<double>(flow) / static_cast<double>(inst.depot_capacity[j]);
  }
  return out;
}

double lp_lower_bound(const Instance& inst) { return lp_relaxation(inst).bound; }

double rpd(double z_alg, double z_lb) {
  if (!(z_lb > 0.0) || !std::isfinite(z_lb))
    throw DomainError("RPD needs a positive lower bound, got " + std::to_string(z_lb));
  return (z_alg - z_lb) * 100.0 / z_lb;
}

}  // namespace tscflp
