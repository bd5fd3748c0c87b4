#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "tscflp/heuristics.hpp"
#include "tscflp/instance.hpp"
#include "tscflp/surrogate.hpp"

namespace tscflp {

struct OperatorConfig {
  double pc_min = 0.5;
  double pc_max = 0.9;
  double pm_min = 0.01;
  double pm_max = 0.2;

  /// Throws std::invalid_argument unless 0 <= min <= max <= 1 for both pairs.
  void validate() const;
};

/// Adaptive crossover probability (minimization). `f_prime` is the better of
/// the two parents' fitness. Returns pc_max when f_prime >= f_bar and when
/// the population is uniform (f_best == f_bar).
double adaptive_pc(double f_best, double f_bar, double f_prime, const OperatorConfig& cfg);

/// Adaptive mutation probability; `f` is the fitness of the individual
/// being mutated.
double adaptive_pm(double f_best, double f_bar, double f, const OperatorConfig& cfg);

template <class G>
concept UniformSource = requires(G g, std::uint64_t n) {
  { g.uniform01() } -> std::convertible_to<double>;
  { g.below(n) } -> std::convertible_to<std::uint64_t>;
};

/// CX recombination for binary strings: agreeing positions are inherited,
/// each disagreeing position takes parent_a's allele when a fresh uniform
/// draw is < 0.5 and parent_b's otherwise. Draws are consumed only for
/// disagreeing positions, in position order (plants first, then depots).
template <UniformSource G>
Individual cx_crossover(const Individual& parent_a, const Individual& parent_b, G& rng) {
  if (parent_a.y.size() != parent_b.y.size() || parent_a.z.size() != parent_b.z.size())
    throw std::invalid_argument("cx_crossover: parent lengths differ");
  Individual child = parent_a;
  for (std::size_t pos = 0; pos < child.size(); ++pos) {
    const auto a = parent_a.bit(pos), b = parent_b.bit(pos);
    if (a != b) child.set_bit(pos, rng.uniform01() < 0.5 ? a : b);
  }
  return child;
}

namespace detail {
template <UniformSource G>
void swap_two(std::vector<std::uint8_t>& seg, G& rng) {
  if (seg.size() < 2) return;
  const auto n = static_cast<std::uint64_t>(seg.size());
  const auto first = static_cast<std::size_t>(rng.below(n));
  auto second = static_cast<std::size_t>(rng.below(n - 1));
  if (second >= first) ++second;
  std::swap(seg[first], seg[second]);
}
}  // namespace detail

/// Exchanges two distinct, uniformly chosen positions in the plant segment,
/// then independently two in the depot segment. A segment shorter than two
/// is left alone. Popcounts per segment are preserved.
template <UniformSource G>
Individual swap_mutation(const Individual& ind, G& rng) {
  Individual out = ind;
  detail::swap_two(out.y, rng);
  detail::swap_two(out.z, rng);
  return out;
}

enum class LsCompare {
  surrogate,  // the incumbent is scored by the same model as the candidates
  mixed,      // the incumbent keeps its supplied fitness value
};

using FitnessEstimator = std::function<double(const Individual&)>;

struct LocalSearchResult {
  Individual individual;
  double fitness = 0.0;       // estimate of `individual` on the comparison scale
  std::size_t candidates = 0; // |Q*| after deduplication
  bool improved = false;
};

/// Inversion neighbourhood search around `incumbent`. Every single-bit flip
/// is repaired by mih; repaired candidates different from the incumbent
/// (deduplicated) are scored with `estimate` and the best replaces the
/// incumbent if strictly better.
LocalSearchResult local_search(const Instance& inst, const Individual& incumbent,
                               double incumbent_fitness, const FitnessEstimator& estimate,
                               LsCompare compare = LsCompare::surrogate,
                               const MihOptions& mih_opts = {});

/// Convenience overload scoring with a trained ELM.
LocalSearchResult local_search(const Instance& inst, const Individual& incumbent,
                               const ElmModel& model, const MihOptions& mih_opts = {});

/// Positions where the two individuals agree.
std::size_t agreement(const Individual& a, const Individual& b);

/// True when best and worst agree on at least 90% of positions.
bool restart_triggered(const Individual& best, const Individual& worst);

/// Individuals replaced by a restart: 10% of the population, rounded
/// half up (6 of 60, 7 of 65, 6 of 64).
std::size_t restart_replacements(std::size_t population_size);

/// Population entry. `fitness` is exact when `exact` is set, otherwise the
/// latest surrogate estimate.
struct Member {
  Individual individual;
  double fitness = 0.0;
  bool exact = false;
};

/// Restart test on a population sorted by ascending fitness.
bool restart_check(const std::vector<Member>& sorted_population);

/// Uniform random binary vector repaired by mih.
template <UniformSource G>
Individual random_individual(const Instance& inst, G& rng, const MihOptions& opts = {}) {
  Individual ind(inst.n_plants(), inst.n_depots());
  for (auto& v : ind.y) v = static_cast<std::uint8_t>(rng.below(2));
  for (auto& v : ind.z) v = static_cast<std::uint8_t>(rng.below(2));
  return mih(inst, ind, opts);
}

/// Keeps the best 90% of a sorted population and replaces the rest with
/// random repaired individuals scored by `exact_fitness`. Returns the
/// indices of the replaced slots.
template <UniformSource G>
std::vector<std::size_t> restart(std::vector<Member>& sorted_population, const Instance& inst,
                                 G& rng, const std::function<double(const Individual&)>& exact_fitness,
                                 const MihOptions& opts = {}) {
  const std::size_t n = sorted_population.size();
  const std::size_t k = std::min(n, restart_replacements(n));
  std::vector<std::size_t> replaced;
  for (std::size_t slot = n - k; slot < n; ++slot) {
    Individual fresh = random_individual(inst, rng, opts);
    const double f = exact_fitness(fresh);
    sorted_population[slot] = Member{std::move(fresh), f, true};
    replaced.push_back(slot);
  }
  return replaced;
}

}  // namespace tscflp
