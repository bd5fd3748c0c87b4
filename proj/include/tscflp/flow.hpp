#pragma once

#include <cstddef>
#include <vector>

#include "tscflp/instance.hpp"

namespace tscflp {

/// Layered source -> plants -> depots -> customers -> sink network.
///
/// Plants and depots are only the open ones; `plant_ids`/`depot_ids` map the
/// local row/column index back to the instance. Per-unit throughput costs on
/// plants and depots default to zero; the relaxation bound uses them to fold
/// fixed costs into unit costs.
template <class Cost>
struct LayeredNetworkT {
  std::vector<Units> plant_caps;
  std::vector<Units> depot_caps;
  std::vector<Cost> plant_unit_cost;  // empty means all zero
  std::vector<Cost> depot_unit_cost;  // empty means all zero
  std::vector<Cost> c;                // plants x depots, row-major
  std::vector<Cost> d;                // depots x customers, row-major
  std::vector<Units> demand;
  std::vector<std::size_t> plant_ids;
  std::vector<std::size_t> depot_ids;

  std::size_t n_plants() const noexcept { return plant_caps.size(); }
  std::size_t n_depots() const noexcept { return depot_caps.size(); }
  std::size_t n_customers() const noexcept { return demand.size(); }
};

template <class Cost>
struct FlowPlanT {
  IntMatrix x;  // plant -> depot, local indices
  IntMatrix s;  // depot -> customer
  Cost cost{};
};

using LayeredNetwork = LayeredNetworkT<Units>;
using FlowPlan = FlowPlanT<Units>;

/// Minimum-cost flow delivering every customer's demand exactly.
///
/// Successive shortest paths with node potentials; depot throughput is a
/// split arc (depot-in -> depot-out) with capacity p_j. Flows are integral
/// for either cost type. Throws InfeasibleError when capacity cannot cover
/// demand; never returns a partial flow.
template <class Cost>
FlowPlanT<Cost> min_cost_flow(const LayeredNetworkT<Cost>& net);

/// Cost of `plan` on `net`, recomputed from the flows.
template <class Cost>
Cost flow_cost(const LayeredNetworkT<Cost>& net, const FlowPlanT<Cost>& plan);

/// Network restricted to the facilities open in `ind`.
LayeredNetwork build_network(const Instance& inst, const Individual& ind);

extern template FlowPlanT<Units> min_cost_flow(const LayeredNetworkT<Units>&);
extern template FlowPlanT<double> min_cost_flow(const LayeredNetworkT<double>&);
extern template Units flow_cost(const LayeredNetworkT<Units>&, const FlowPlanT<Units>&);
extern template double flow_cost(const LayeredNetworkT<double>&, const FlowPlanT<double>&);

}  // namespace tscflp
