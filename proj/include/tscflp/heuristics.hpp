#pragma once

#include <cstddef>
#include <vector>

#include "tscflp/instance.hpp"

namespace tscflp {

/// Cost-benefit indices: (fixed + related transport cost) / capacity.
struct CostBenefitIndex {
  std::vector<double> plant;  // (f_i + sum_j c_ij) / b_i
  std::vector<double> depot;  // (sum_i c_ij + g_j + sum_k d_jk) / p_j
};

CostBenefitIndex cost_benefit_index(const Instance& inst);

/// Depot index whose plant-transport term only sums over plants open in `y`.
std::vector<double> depot_index_for_open_plants(const Instance& inst,
                                                const std::vector<std::uint8_t>& y);

/// Facility ids sorted by ascending index, ties broken by lower id.
std::vector<std::size_t> rank_ascending(const std::vector<double>& index);

/// Cost-benefit ranking: opens plants, then depots, cheapest index first
/// while the opened capacity is <= total demand.
Individual cbr(const Instance& inst);

enum class DepotIndexMode {
  open_plants,  // sum_i c_ij over currently open plants (default)
  all_plants,   // the construction formula, sum over every plant
};

struct MihOptions {
  DepotIndexMode depot_index = DepotIndexMode::open_plants;
};

/// Repair-and-improve. Per stage: open facilities in ascending index order
/// until capacity covers demand, then walk open facilities from the worst
/// index down, closing each one whose removal keeps capacity >= demand and
/// stopping (with it reopened) at the first that would not.
Individual mih(const Instance& inst, const Individual& ind, const MihOptions& opts = {});

/// Rounds the relaxation's fractional openings at 0.5, then repairs with mih.
Individual rounding_heuristic(const Instance& inst, const MihOptions& opts = {});

/// The rounded individual before repair; exposed for testing.
Individual round_relaxation(const std::vector<double>& y, const std::vector<double>& z);

}  // namespace tscflp
