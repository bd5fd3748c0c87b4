#pragma once

#include <vector>

#include "tscflp/flow.hpp"
#include "tscflp/instance.hpp"

namespace tscflp {

/// An individual with its exact objective and the flows realizing it.
struct EvaluatedSolution {
  Individual individual;
  Units fixed_cost = 0;
  Units objective_exact = 0;  // fixed_cost + flows.cost
  double objective = 0.0;     // same value, for reporting
  FlowPlan flows;             // indexed by the open facilities, see network
  LayeredNetwork network;
  bool exact = true;
};

Units fixed_cost(const Instance& inst, const Individual& ind);

/// Exact objective: fixed costs of open facilities plus the min-cost flow
/// over them. Throws InfeasibleError naming the short stage ("plant" or
/// "depot") when the individual cannot cover demand.
EvaluatedSolution evaluate_exact(const Instance& inst, const Individual& ind);

/// Continuous relaxation with y, z in [0, 1].
///
/// With fractional opening the cheapest choice is y_i = outflow_i / b_i and
/// z_j = throughput_j / p_j, so fixed costs become per-unit surcharges
/// f_i/b_i and g_j/p_j and the relaxation is a single min-cost flow over all
/// facilities. The per-arc bound x_ij <= b_i z_j is not imposed; the value is
/// still a valid lower bound on the integer optimum.
struct LpRelaxation {
  double bound = 0.0;
  std::vector<double> y;  // fractional plant openings
  std::vector<double> z;  // fractional depot openings
};

LpRelaxation lp_relaxation(const Instance& inst);
double lp_lower_bound(const Instance& inst);

/// Relative percentage deviation (z_alg - z_lb) * 100 / z_lb.
/// Throws DomainError unless z_lb > 0.
double rpd(double z_alg, double z_lb);

}  // namespace tscflp
