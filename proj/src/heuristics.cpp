#include "tscflp/heuristics.hpp"

#include <algorithm>
#include <numeric>

#include "tscflp/evaluator.hpp"

namespace tscflp {

namespace {

// Opens by ascending index while capacity <= demand (construction rule).
void open_while_not_exceeding(const std::vector<Units>& cap, const std::vector<double>& index,
                              Units demand, std::vector<std::uint8_t>& open) {
  Units total = 0;
  for (std::size_t i = 0; i < cap.size(); ++i)
    if (open[i]) total += cap[i];
  for (std::size_t id : rank_ascending(index)) {
    if (total > demand) break;
    if (open[id]) continue;
    open[id] = 1;
    total += cap[id];
  }
}

void repair_stage(const std::vector<Units>& cap, const std::vector<double>& index, Units demand,
                  std::vector<std::uint8_t>& open) {
  const auto order = rank_ascending(index);
  Units total = 0;
  for (std::size_t i = 0; i < cap.size(); ++i)
    if (open[i]) total += cap[i];

  for (std::size_t id : order) {
    if (total >= demand) break;
    if (!open[id]) {
      open[id] = 1;
      total += cap[id];
    }
  }

  for (auto it = order.rbegin(); it != order.rend() && total > demand; ++it) {
    const std::size_t id = *it;
    if (!open[id]) continue;
    if (total - cap[id] < demand) break;  // closing would break feasibility
    open[id] = 0;
    total -= cap[id];
  }
}

}  // namespace

CostBenefitIndex cost_benefit_index(const Instance& inst) {
  const std::size_t ni = inst.n_plants(), nj = inst.n_depots(), nk = inst.n_customers();
  CostBenefitIndex idx;
  idx.plant.resize(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    Units sum = inst.plant_fixed_cost[i];
    for (std::size_t j = 0; j < nj; ++j) sum += inst.plant_depot_cost(i, j);
    idx.plant[i] = static_cast<double>(sum) / static_cast<double>(inst.plant_capacity[i]);
  }
  idx.depot.resize(nj);
  for (std::size_t j = 0; j < nj; ++j) {
    Units sum = inst.depot_fixed_cost[j];
    for (std::size_t i = 0; i < ni; ++i) sum += inst.plant_depot_cost(i, j);
    for (std::size_t k = 0; k < nk; ++k) sum += inst.depot_customer_cost(j, k);
    idx.depot[j] = static_cast<double>(sum) / static_cast<double>(inst.depot_capacity[j]);
  }
  return idx;
}

std::vector<double> depot_index_for_open_plants(const Instance& inst,
                                                const std::vector<std::uint8_t>& y) {
  const std::size_t ni = inst.n_plants(), nj = inst.n_depots(), nk = inst.n_customers();
  std::vector<double> idx(nj);
  for (std::size_t j = 0; j < nj; ++j) {
    Units sum = inst.depot_fixed_cost[j];
    for (std::size_t i = 0; i < ni; ++i)
      if (y[i]) sum += inst.plant_depot_cost(i, j);
    for (std::size_t k = 0; k < nk; ++k) sum += inst.depot_customer_cost(j, k);
    idx[j] = static_cast<double>(sum) / static_cast<double>(inst.depot_capacity[j]);
  }
  return idx;
}

std::vector<std::size_t> rank_ascending(const std::vector<double>& index) {
  std::vector<std::size_t> order(index.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&index](std::size_t a, std::size_t b) { return index[a] < index[b]; });
  return order;
}

Individual cbr(const Instance& inst) {
  const auto idx = cost_benefit_index(inst);
  const Units demand = inst.total_demand();
  Individual ind(inst.n_plants(), inst.n_depots());
  open_while_not_exceeding(inst.plant_capacity, idx.plant, demand, ind.y);
  open_while_not_exceeding(inst.depot_capacity, idx.depot, demand, ind.z);
  return ind;
}

Individual mih(const Instance& inst, const Individual& ind, const MihOptions& opts) {
  const Units demand = inst.total_demand();
  Individual out = ind;
  const auto idx = cost_benefit_index(inst);
  repair_stage(inst.plant_capacity, idx.plant, demand, out.y);
  const auto depot_idx = opts.depot_index == DepotIndexMode::open_plants
                             ? depot_index_for_open_plants(inst, out.y)
                             : idx.depot;
  repair_stage(inst.depot_capacity, depot_idx, demand, out.z);
  return out;
}

Individual round_relaxation(const std::vector<double>& y, const std::vector<double>& z) {
  Individual ind(y.size(), z.size());
  for (std::size_t i = 0; i < y.size(); ++i) ind.y[i] = y[i] >= 0.5;
  for (std::size_t j = 0; j < z.size(); ++j) ind.z[j] = z[j] >= 0.5;
  return ind;
}

Individual rounding_heuristic(const Instance& inst, const MihOptions& opts) {
  const auto relax = lp_relaxation(inst);
  return mih(inst, round_relaxation(relax.y, relax.z), opts);
}

}  // namespace tscflp
