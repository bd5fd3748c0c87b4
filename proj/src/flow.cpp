#include "tscflp/flow.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "tscflp/errors.hpp"

namespace tscflp {

namespace {

template <class Cost>
class ResidualGraph {
 public:
  struct Arc {
    std::size_t to;
    std::size_t rev;  // index of the paired arc in adj_[to]
    Units cap;
    Cost cost;
  };

  explicit ResidualGraph(std::size_t n) : adj_(n) {}

  // Returns (node, index) of the forward arc.
  std::pair<std::size_t, std::size_t> add_arc(std::size_t from, std::size_t to, Units cap, Cost cost) {
    const std::size_t fwd = adj_[from].size();
    const std::size_t bwd = adj_[to].size() + (from == to ? 1 : 0);
    adj_[from].push_back({to, bwd, cap, cost});
    adj_[to].push_back({from, fwd, 0, -cost});
    return {from, fwd};
  }

  Units flow_on(std::pair<std::size_t, std::size_t> handle) const {
    const Arc& a = adj_[handle.first][handle.second];
    return adj_[a.to][a.rev].cap;
  }

  // Sends up to `limit` units from s to t; returns units sent.
  Units augment_shortest_paths(std::size_t s, std::size_t t, Units limit) {
    const std::size_t n = adj_.size();
    constexpr Cost kInf = std::numeric_limits<Cost>::max();
    // Arc costs are nonnegative, so zero potentials are a valid start.
    std::vector<Cost> dual(n, Cost{0}), dist(n);
    std::vector<std::size_t> prev_node(n), prev_arc(n);
    std::vector<char> visited(n);
    Units sent = 0;

    using Entry = std::pair<Cost, std::size_t>;
    while (sent < limit) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(visited.begin(), visited.end(), 0);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
      dist[s] = 0;
      heap.emplace(Cost{0}, s);
      while (!heap.empty()) {
        auto [du, u] = heap.top();
        heap.pop();
        if (visited[u]) continue;
        visited[u] = 1;
        if (u == t) break;
        for (std::size_t k = 0; k < adj_[u].size(); ++k) {
          const Arc& a = adj_[u][k];
          if (a.cap <= 0 || visited[a.to]) continue;
          Cost reduced = a.cost - dual[a.to] + dual[u];
          if (reduced < Cost{0}) reduced = Cost{0};  // rounding noise for fractional costs
          const Cost cand = du + reduced;
          if (cand < dist[a.to]) {
            dist[a.to] = cand;
            prev_node[a.to] = u;
            prev_arc[a.to] = k;
            heap.emplace(cand, a.to);
          }
        }
      }
      if (!visited[t]) break;
      for (std::size_t v = 0; v < n; ++v)
        if (visited[v]) dual[v] -= dist[t] - dist[v];

      Units push = limit - sent;
      for (std::size_t v = t; v != s; v = prev_node[v])
        push = std::min(push, adj_[prev_node[v]][prev_arc[v]].cap);
      for (std::size_t v = t; v != s; v = prev_node[v]) {
        Arc& a = adj_[prev_node[v]][prev_arc[v]];
        a.cap -= push;
        adj_[a.to][a.rev].cap += push;
      }
      sent += push;
    }
    return sent;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
};

template <class Cost>
Cost unit_cost_or_zero(const std::vector<Cost>& v, std::size_t i) {
  return v.empty() ? Cost{0} : v[i];
}

}  // namespace

template <class Cost>
FlowPlanT<Cost> min_cost_flow(const LayeredNetworkT<Cost>& net) {
  const std::size_t ni = net.n_plants(), nj = net.n_depots(), nk = net.n_customers();
  const Units demand = std::accumulate(net.demand.begin(), net.demand.end(), Units{0});
  const Units plant_cap = std::accumulate(net.plant_caps.begin(), net.plant_caps.end(), Units{0});
  const Units depot_cap = std::accumulate(net.depot_caps.begin(), net.depot_caps.end(), Units{0});
  if (plant_cap < demand)
    throw InfeasibleError("plant", "plant capacity " + std::to_string(plant_cap) +
                                       " cannot cover demand " + std::to_string(demand));
  if (depot_cap < demand)
    throw InfeasibleError("depot", "depot capacity " + std::to_string(depot_cap) +
                                       " cannot cover demand " + std::to_string(demand));

  FlowPlanT<Cost> plan{IntMatrix(ni, nj), IntMatrix(nj, nk), Cost{0}};
  if (demand == 0) return plan;

  // Node layout: source, plants, depot-in, depot-out, customers, sink.
  const std::size_t source = 0;
  const std::size_t plant0 = 1;
  const std::size_t din0 = plant0 + ni;
  const std::size_t dout0 = din0 + nj;
  const std::size_t cust0 = dout0 + nj;
  const std::size_t sink = cust0 + nk;
  ResidualGraph<Cost> g(sink + 1);

  const Units unbounded = demand;
  for (std::size_t i = 0; i < ni; ++i)
    if (net.plant_caps[i] > 0) g.add_arc(source, plant0 + i, net.plant_caps[i], unit_cost_or_zero(net.plant_unit_cost, i));
  std::vector<std::pair<std::size_t, std::size_t>> x_arcs(ni * nj), s_arcs(nj * nk);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j)
      x_arcs[i * nj + j] = g.add_arc(plant0 + i, din0 + j, unbounded, net.c[i * nj + j]);
  for (std::size_t j = 0; j < nj; ++j)
    if (net.depot_caps[j] > 0) g.add_arc(din0 + j, dout0 + j, net.depot_caps[j], unit_cost_or_zero(net.depot_unit_cost, j));
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t k = 0; k < nk; ++k)
      s_arcs[j * nk + k] = g.add_arc(dout0 + j, cust0 + k, unbounded, net.d[j * nk + k]);
  for (std::size_t k = 0; k < nk; ++k)
    if (net.demand[k] > 0) g.add_arc(cust0 + k, sink, net.demand[k], Cost{0});

  const Units sent = g.augment_shortest_paths(source, sink, demand);
  if (sent < demand)
    throw InfeasibleError("network", "only " + std::to_string(sent) + " of " +
                                         std::to_string(demand) + " units can be routed");

  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < nj; ++j) plan.x(i, j) = g.flow_on(x_arcs[i * nj + j]);
  for (std::size_t j = 0; j < nj; ++j)
    for (std::size_t k = 0; k < nk; ++k) plan.s(j, k) = g.flow_on(s_arcs[j * nk + k]);
  plan.cost = flow_cost(net, plan);
  return plan;
}

template <class Cost>
Cost flow_cost(const LayeredNetworkT<Cost>& net, const FlowPlanT<Cost>& plan) {
  const std::size_t ni = net.n_plants(), nj = net.n_depots(), nk = net.n_customers();
  Cost total{0};
  for (std::size_t i = 0; i < ni; ++i) {
    Units out = 0;
    for (std::size_t j = 0; j < nj; ++j) {
      out += plan.x(i, j);
      total += net.c[i * nj + j] * static_cast<Cost>(plan.x(i, j));
    }
    total += unit_cost_or_zero(net.plant_unit_cost, i) * static_cast<Cost>(out);
  }
  for (std::size_t j = 0; j < nj; ++j) {
    Units out = 0;
    for (std::size_t k = 0; k < nk; ++k) {
      out += plan.s(j, k);
      total += net.d[j * nk + k] * static_cast<Cost>(plan.s(j, k));
    }
    total += unit_cost_or_zero(net.depot_unit_cost, j) * static_cast<Cost>(out);
  }
  return total;
}

LayeredNetwork build_network(const Instance& inst, const Individual& ind) {
  LayeredNetwork net;
  for (std::size_t i = 0; i < inst.n_plants(); ++i)
    if (ind.y[i]) net.plant_ids.push_back(i);
  for (std::size_t j = 0; j < inst.n_depots(); ++j)
    if (ind.z[j]) net.depot_ids.push_back(j);
  for (auto i : net.plant_ids) net.plant_caps.push_back(inst.plant_capacity[i]);
  for (auto j : net.depot_ids) net.depot_caps.push_back(inst.depot_capacity[j]);
  net.demand = inst.demand;
  net.c.reserve(net.plant_ids.size() * net.depot_ids.size());
  for (auto i : net.plant_ids)
    for (auto j : net.depot_ids) net.c.push_back(inst.plant_depot_cost(i, j));
  net.d.reserve(net.depot_ids.size() * inst.n_customers());
  for (auto j : net.depot_ids)
    for (std::size_t k = 0; k < inst.n_customers(); ++k) net.d.push_back(inst.depot_customer_cost(j, k));
  return net;
}

template FlowPlanT<Units> min_cost_flow(const LayeredNetworkT<Units>&);
template FlowPlanT<double> min_cost_flow(const LayeredNetworkT<double>&);
template Units flow_cost(const LayeredNetworkT<Units>&, const FlowPlanT<Units>&);
template double flow_cost(const LayeredNetworkT<double>&, const FlowPlanT<double>&);

}  // namespace tscflp
