#include "tscflp/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "tscflp/evaluator.hpp"
#include "tscflp/rng.hpp"

namespace tscflp {

EngineMode parse_engine_mode(const std::string& name) {
  if (name == "hea_fa" || name == "hea") return EngineMode::hea_fa;
  if (name == "baseline_ga" || name == "ga") return EngineMode::baseline_ga;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

const char* engine_mode_name(EngineMode mode) {
  return mode == EngineMode::hea_fa ? "hea_fa" : "baseline_ga";
}

std::size_t EngineConfig::elite_count() const {
  if (elites > 0) return elites;
  return std::max<std::size_t>(1, restart_replacements(population));
}

void EngineConfig::validate() const {
  if (population < 4) throw std::invalid_argument("population size must be >= 4");
  if (max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
  if (elite_count() < 1) throw std::invalid_argument("elite count must be >= 1");
  operators.validate();
}

ElmApproximator::ElmApproximator(std::size_t input_dim, std::uint64_t seed, const SurrogateConfig& cfg)
    : input_dim_(input_dim), seed_(seed), cfg_(cfg) {}

void ElmApproximator::fit(const TrainingSet& set) {
  const std::size_t h = cfg_.hidden > 0 ? cfg_.hidden : default_hidden_count(input_dim_, set.size());
  model_ = elm_train(elm_init(input_dim_, h, seed_, cfg_.activation), set);
}

double ElmApproximator::predict(const Individual& ind) const { return elm_predict(model_, ind); }

namespace {

bool by_fitness(const Member& a, const Member& b) { return a.fitness < b.fitness; }

class Engine {
 public:
  // `approx` == nullptr selects the plain GA.
  Engine(const Instance& inst, const EngineConfig& cfg, FitnessApproximator* approx)
      : inst_(inst), cfg_(cfg), approx_(approx), rng_(Rng::substream(cfg.seed, "engine")) {
    cfg_.validate();
    validate(inst_);
  }

  RunReport run() {
    const auto started = std::chrono::steady_clock::now();
    initialize();

    std::size_t t = 1, non_improving = 0;
    while (t <= cfg_.max_iterations && non_improving < cfg_.max_non_improving) {
      if (iterate()) non_improving = 0;
      else ++non_improving;
      report_.objective_trace.push_back(best_.fitness);
      ++t;
    }
    report_.iterations_run = t - 1;

    // The reported best is always re-derived from scratch.
    const auto check = evaluate_exact(inst_, best_.individual);
    if (check.objective != best_.fitness)
      throw std::logic_error("best objective does not match its exact re-evaluation");

    report_.best_individual = best_.individual;
    report_.best_objective = check.objective;
    report_.seed = cfg_.seed;
    report_.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report_;
  }

 private:
  bool surrogate_mode() const { return approx_ != nullptr; }

  double exact(const Individual& ind) {
    ++report_.exact_eval_count;
    return evaluate_exact(inst_, ind).objective;
  }

  // Fitness for an individual that has not been exactly evaluated.
  Member score(Individual ind) {
    if (!surrogate_mode()) {
      const double f = exact(ind);
      return {std::move(ind), f, true};
    }
    ++report_.surrogate_eval_count;
    const double f = approx_->predict(ind);
    return {std::move(ind), f, false};
  }

  bool offer_best(const Member& m) {
    if (m.exact && m.fitness < best_.fitness) {
      best_ = m;
      return true;
    }
    return false;
  }

  void initialize() {
    const std::size_t pool_size = 2 * cfg_.population;
    std::vector<Individual> pool;
    pool.reserve(pool_size);
    pool.push_back(mih(inst_, cbr(inst_), cfg_.mih));
    pool.push_back(rounding_heuristic(inst_, cfg_.mih));
    while (pool.size() < pool_size) pool.push_back(random_individual(inst_, rng_, cfg_.mih));

    std::vector<Member> members;
    members.reserve(pool_size);
    for (auto& ind : pool) {
      const double f = exact(ind);
      training_.add(ind, f);
      members.push_back({std::move(ind), f, true});
    }
    if (surrogate_mode()) approx_->fit(training_);

    std::stable_sort(members.begin(), members.end(), by_fitness);
    members.resize(cfg_.population);
    population_ = std::move(members);
    best_ = population_.front();
  }

  // One generation; returns true when the global best improved.
  bool iterate() {
    const std::size_t np = population_.size();
    double f_best = std::numeric_limits<double>::infinity(), f_sum = 0.0;
    for (const auto& m : population_) {
      f_best = std::min(f_best, m.fitness);
      f_sum += m.fitness;
    }
    const double f_bar = f_sum / static_cast<double>(np);

    std::unordered_set<Individual, IndividualHash> seen;
    for (const auto& m : population_) seen.insert(m.individual);

    // Selection and crossover: one offspring per random pair.
    std::vector<Individual> children;
    for (std::size_t n = 0; n < np; ++n) {
      const auto a = static_cast<std::size_t>(rng_.below(np));
      auto b = static_cast<std::size_t>(rng_.below(np - 1));
      if (b >= a) ++b;
      const Member& pa = population_[a];
      const Member& pb = population_[b];
      const double pc = adaptive_pc(f_best, f_bar, std::min(pa.fitness, pb.fitness), cfg_.operators);
      Individual child = rng_.uniform01() < pc
                             ? cx_crossover(pa.individual, pb.individual, rng_)
                             : (pb.fitness < pa.fitness ? pb.individual : pa.individual);
      child = mih(inst_, child, cfg_.mih);
      if (seen.insert(child).second) children.push_back(std::move(child));
    }

    // Mutation, keeping P' free of duplicates.
    std::vector<Member> offspring;
    offspring.reserve(children.size());
    for (auto& child : children) {
      Member m = score(std::move(child));
      const double pm = adaptive_pm(f_best, f_bar, m.fitness, cfg_.operators);
      if (rng_.uniform01() < pm) {
        Individual mutant = mih(inst_, swap_mutation(m.individual, rng_), cfg_.mih);
        if (seen.insert(mutant).second) {
          seen.erase(m.individual);
          m = score(std::move(mutant));
        }
      }
      offspring.push_back(std::move(m));
    }

    bool improved = false;
    if (!offspring.empty()) {
      if (surrogate_mode()) improved = surrogate_step(offspring, seen);
      else
        for (const auto& m : offspring) improved = offer_best(m) || improved;
    }

    // Elitist merge of P and P'.
    for (auto& m : offspring) population_.push_back(std::move(m));
    std::stable_sort(population_.begin(), population_.end(), by_fitness);
    population_.resize(np);

    if (restart_check(population_)) {
      const auto replaced = restart(
          population_, inst_, rng_,
          [this](const Individual& ind) { return exact(ind); }, cfg_.mih);
      for (auto slot : replaced) {
        training_.add(population_[slot].individual, population_[slot].fitness);
        improved = offer_best(population_[slot]) || improved;
      }
      ++report_.restarts;
      report_.restart_replacements += replaced.size();
      std::stable_sort(population_.begin(), population_.end(), by_fitness);
    }
    return improved;
  }

  // Local search, elite exact evaluation and retraining.
  bool surrogate_step(std::vector<Member>& offspring,
                      std::unordered_set<Individual, IndividualHash>& seen) {
    auto best_it = std::min_element(offspring.begin(), offspring.end(), by_fitness);

    if (cfg_.surrogate.local_search) {
      const FitnessEstimator estimate = [this](const Individual& ind) {
        ++report_.surrogate_eval_count;
        return approx_->predict(ind);
      };
      auto ls = local_search(inst_, best_it->individual, best_it->fitness, estimate,
                             cfg_.surrogate.ls_compare, cfg_.mih);
      if (ls.improved && seen.insert(ls.individual).second) {
        seen.erase(best_it->individual);
        *best_it = Member{std::move(ls.individual), ls.fitness, false};
      }
    }

    // Best N_e by surrogate rank get exact values.
    std::vector<std::size_t> order(offspring.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&offspring](std::size_t a, std::size_t b) {
      return offspring[a].fitness < offspring[b].fitness;
    });
    const std::size_t ne = std::min(cfg_.elite_count(), offspring.size());
    for (std::size_t r = 0; r < ne; ++r) {
      Member& m = offspring[order[r]];
      m.fitness = exact(m.individual);
      m.exact = true;
      training_.add(m.individual, m.fitness);
    }
    bool improved = false;
    for (const auto& m : offspring) improved = offer_best(m) || improved;

    approx_->fit(training_);
    for (auto& m : population_)
      if (!m.exact) m.fitness = approx_->predict(m.individual);
    for (auto& m : offspring)
      if (!m.exact) m.fitness = approx_->predict(m.individual);
    return improved;
  }

  const Instance& inst_;
  EngineConfig cfg_;
  FitnessApproximator* approx_;
  Rng rng_;
  TrainingSet training_;
  std::vector<Member> population_;
  Member best_;
  RunReport report_;
};

}  // namespace

RunReport hea_fa_run(const Instance& inst, const EngineConfig& cfg, FitnessApproximator& approx) {
  return Engine(inst, cfg, &approx).run();
}

RunReport hea_fa_run(const Instance& inst, const EngineConfig& cfg) {
  ElmApproximator approx(inst.n_plants() + inst.n_depots(), cfg.seed, cfg.surrogate);
  return hea_fa_run(inst, cfg, approx);
}

RunReport baseline_ga_run(const Instance& inst, const EngineConfig& cfg) {
  return Engine(inst, cfg, nullptr).run();
}

RunReport run_engine(const Instance& inst, const EngineConfig& cfg) {
  return cfg.mode == EngineMode::hea_fa ? hea_fa_run(inst, cfg) : baseline_ga_run(inst, cfg);
}

}  // namespace tscflp
