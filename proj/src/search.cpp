#include "tscflp/search.hpp"

#include <algorithm>
#include <unordered_set>

namespace tscflp {

namespace {

double adaptive_probability(double f_best, double f_bar, double f, double lo, double hi) {
  if (f >= f_bar || f_best >= f_bar) return hi;
  const double ratio = (f_best - f) / (f_best - f_bar);
  return std::clamp(lo + ratio * (hi - lo), lo, hi);
}

}  // namespace

void OperatorConfig::validate() const {
  auto ok = [](double lo, double hi) { return 0.0 <= lo && lo <= hi && hi <= 1.0; };
  if (!ok(pc_min, pc_max)) throw std::invalid_argument("need 0 <= pc_min <= pc_max <= 1");
  if (!ok(pm_min, pm_max)) throw std::invalid_argument("need 0 <= pm_min <= pm_max <= 1");
}

double adaptive_pc(double f_best, double f_bar, double f_prime, const OperatorConfig& cfg) {
  return adaptive_probability(f_best, f_bar, f_prime, cfg.pc_min, cfg.pc_max);
}

double adaptive_pm(double f_best, double f_bar, double f, const OperatorConfig& cfg) {
  return adaptive_probability(f_best, f_bar, f, cfg.pm_min, cfg.pm_max);
}

LocalSearchResult local_search(const Instance& inst, const Individual& incumbent,
                               double incumbent_fitness, const FitnessEstimator& estimate,
                               LsCompare compare, const MihOptions& mih_opts) {
  std::vector<Individual> candidates;
  std::unordered_set<Individual, IndividualHash> seen;
  for (std::size_t pos = 0; pos < incumbent.size(); ++pos) {
    Individual flipped = incumbent;
    flipped.set_bit(pos, flipped.bit(pos) ? 0 : 1);
    Individual repaired = mih(inst, flipped, mih_opts);
    if (repaired == incumbent) continue;
    if (seen.insert(repaired).second) candidates.push_back(std::move(repaired));
  }

  LocalSearchResult result;
  result.individual = incumbent;
  result.fitness = compare == LsCompare::surrogate ? estimate(incumbent) : incumbent_fitness;
  result.candidates = candidates.size();
  for (auto& cand : candidates) {
    const double score = estimate(cand);
    if (score < result.fitness) {
      result.fitness = score;
      result.individual = std::move(cand);
      result.improved = true;
    }
  }
  return result;
}

LocalSearchResult local_search(const Instance& inst, const Individual& incumbent,
                               const ElmModel& model, const MihOptions& mih_opts) {
  const FitnessEstimator estimate = [&model](const Individual& ind) { return elm_predict(model, ind); };
  return local_search(inst, incumbent, 0.0, estimate, LsCompare::surrogate, mih_opts);
}

std::size_t agreement(const Individual& a, const Individual& b) {
  std::size_t same = 0;
  for (std::size_t pos = 0; pos < a.size(); ++pos) same += a.bit(pos) == b.bit(pos);
  return same;
}

bool restart_triggered(const Individual& best, const Individual& worst) {
  return 10 * agreement(best, worst) >= 9 * best.size();
}

bool restart_check(const std::vector<Member>& sorted_population) {
  if (sorted_population.empty()) return false;
  return restart_triggered(sorted_population.front().individual, sorted_population.back().individual);
}

std::size_t restart_replacements(std::size_t population_size) {
  return (population_size + 5) / 10;
}

}  // namespace tscflp
