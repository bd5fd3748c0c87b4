#pragma once
// Independent reference computations used by the tests. Nothing here calls
// the solver under test except where noted.

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "tscflp/evaluator.hpp"
#include "tscflp/flow.hpp"
#include "tscflp/instance.hpp"
#include "tscflp/rng.hpp"

namespace oracle {

using tscflp::Units;

// Every way of writing `total` as an ordered sum of `parts` non-negative
// terms, each bounded by caps[i].
inline void compositions(Units total, const std::vector<Units>& caps, std::vector<Units>& cur,
                         std::size_t at, const std::function<void(const std::vector<Units>&)>& fn) {
  if (at + 1 == caps.size()) {
    if (total <= caps[at]) {
      cur[at] = total;
      fn(cur);
    }
    return;
  }
  for (Units v = 0; v <= std::min(total, caps[at]); ++v) {
    cur[at] = v;
    compositions(total - v, caps, cur, at + 1, fn);
  }
}

// Brute-force integral min-cost flow on a layered network. Enumerates every
// customer split over depots; for each resulting depot throughput vector,
// every split of each depot's throughput over plants (memoized).
inline std::optional<Units> brute_force_flow(const tscflp::LayeredNetwork& net) {
  const std::size_t ni = net.n_plants(), nj = net.n_depots(), nk = net.n_customers();
  auto unit_plant = [&](std::size_t i) { return net.plant_unit_cost.empty() ? 0 : net.plant_unit_cost[i]; };
  auto unit_depot = [&](std::size_t j) { return net.depot_unit_cost.empty() ? 0 : net.depot_unit_cost[j]; };
  const Units inf = std::numeric_limits<Units>::max() / 4;

  std::map<std::vector<Units>, Units> memo;
  auto first_stage = [&](const std::vector<Units>& through) -> Units {
    if (auto it = memo.find(through); it != memo.end()) return it->second;
    Units best = inf;
    std::vector<Units> left(net.plant_caps);
    std::function<void(std::size_t, Units)> rec = [&](std::size_t j, Units acc) {
      if (acc >= best) return;
      if (j == nj) {
        best = acc;
        return;
      }
      std::vector<Units> cur(ni);
      std::vector<std::vector<Units>> splits;
      compositions(through[j], left, cur, 0, [&](const std::vector<Units>& s) { splits.push_back(s); });
      for (const auto& s : splits) {
        Units add = 0;
        for (std::size_t i = 0; i < ni; ++i) {
          add += s[i] * (net.c[i * nj + j] + unit_plant(i));
          left[i] -= s[i];
        }
        rec(j + 1, acc + add);
        for (std::size_t i = 0; i < ni; ++i) left[i] += s[i];
      }
    };
    rec(0, 0);
    memo[through] = best;
    return best;
  };

  Units best = inf;
  std::vector<Units> room(net.depot_caps);
  std::function<void(std::size_t, Units)> rec = [&](std::size_t k, Units acc) {
    if (k == nk) {
      std::vector<Units> through(nj);
      Units depot_cost = 0;
      for (std::size_t j = 0; j < nj; ++j) {
        through[j] = net.depot_caps[j] - room[j];
        depot_cost += through[j] * unit_depot(j);
      }
      const Units first = first_stage(through);
      if (first < inf) best = std::min(best, acc + depot_cost + first);
      return;
    }
    std::vector<Units> cur(nj);
    std::vector<std::vector<Units>> splits;
    compositions(net.demand[k], room, cur, 0, [&](const std::vector<Units>& s) { splits.push_back(s); });
    for (const auto& s : splits) {
      Units add = 0;
      for (std::size_t j = 0; j < nj; ++j) {
        add += s[j] * net.d[j * nk + k];
        room[j] -= s[j];
      }
      rec(k + 1, acc + add);
      for (std::size_t j = 0; j < nj; ++j) room[j] += s[j];
    }
  };
  if (nk == 0) return 0;
  rec(0, 0);
  if (best >= inf) return std::nullopt;
  return best;
}

// Calls fn on every (y, z) over the instance's facilities.
inline void for_each_mask(const tscflp::Instance& inst,
                          const std::function<void(const tscflp::Individual&)>& fn) {
  const std::size_t n = inst.n_plants() + inst.n_depots();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    tscflp::Individual ind(inst.n_plants(), inst.n_depots());
    for (std::size_t pos = 0; pos < n; ++pos) ind.set_bit(pos, (mask >> pos) & 1U);
    fn(ind);
  }
}

struct Optimum {
  Units value = std::numeric_limits<Units>::max();
  tscflp::Individual individual;
  std::size_t feasible = 0;
};

// Best exact objective over all capacity-feasible masks. Transport costs
// come from evaluate_exact, which the flow tests check separately.
inline Optimum enumerate_optimum(const tscflp::Instance& inst) {
  Optimum best;
  for_each_mask(inst, [&](const tscflp::Individual& ind) {
    if (!tscflp::is_feasible(inst, ind)) return;
    ++best.feasible;
    const Units z = tscflp::evaluate_exact(inst, ind).objective_exact;
    if (z < best.value) {
      best.value = z;
      best.individual = ind;
    }
  });
  return best;
}

// Small random network, feasible or not.
inline tscflp::LayeredNetwork random_network(tscflp::Rng& rng, std::size_t max_i, std::size_t max_j,
                                             std::size_t max_k, Units max_demand, bool unit_costs) {
  tscflp::LayeredNetwork net;
  const auto ni = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_i)));
  const auto nj = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_j)));
  const auto nk = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(max_k)));
  for (std::size_t k = 0; k < nk; ++k) net.demand.push_back(rng.uniform_int(0, max_demand));
  Units total = 0;
  for (auto q : net.demand) total += q;
  const Units cap_hi = std::max<Units>(1, total);
  for (std::size_t i = 0; i < ni; ++i) net.plant_caps.push_back(rng.uniform_int(0, cap_hi));
  for (std::size_t j = 0; j < nj; ++j) net.depot_caps.push_back(rng.uniform_int(0, cap_hi));
  for (std::size_t i = 0; i < ni * nj; ++i) net.c.push_back(rng.uniform_int(1, 20));
  for (std::size_t i = 0; i < nj * nk; ++i) net.d.push_back(rng.uniform_int(1, 20));
  if (unit_costs) {
    for (std::size_t i = 0; i < ni; ++i) net.plant_unit_cost.push_back(rng.uniform_int(0, 10));
    for (std::size_t j = 0; j < nj; ++j) net.depot_unit_cost.push_back(rng.uniform_int(0, 10));
  }
  for (std::size_t i = 0; i < ni; ++i) net.plant_ids.push_back(i);
  for (std::size_t j = 0; j < nj; ++j) net.depot_ids.push_back(j);
  return net;
}

// Desk-scale instance of a benchmark class: 3 plants, 6 depots, 12 customers.
inline tscflp::Instance desk_instance(int class_id, std::uint64_t seed) {
  return tscflp::generate_instance(class_id, 3, seed);
}

}  // namespace oracle
