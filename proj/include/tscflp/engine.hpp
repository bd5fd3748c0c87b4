#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "tscflp/heuristics.hpp"
#include "tscflp/instance.hpp"
#include "tscflp/search.hpp"
#include "tscflp/surrogate.hpp"

namespace tscflp {

enum class EngineMode { hea_fa, baseline_ga };

EngineMode parse_engine_mode(const std::string& name);
const char* engine_mode_name(EngineMode mode);

struct SurrogateConfig {
  Activation activation = Activation::sigmoid;
  std::size_t hidden = 0;  // 0: min(2n, |S| - 1), re-chosen at every retrain
  bool local_search = true;
  LsCompare ls_compare = LsCompare::surrogate;
};

struct EngineConfig {
  std::size_t population = 60;
  std::size_t max_iterations = 200;
  std::size_t max_non_improving = 50;
  std::size_t elites = 0;  // 0: 10% of the population, rounded half up
  std::uint64_t seed = 1;
  EngineMode mode = EngineMode::hea_fa;
  OperatorConfig operators;
  SurrogateConfig surrogate;
  MihOptions mih;

  std::size_t elite_count() const;
  /// Throws std::invalid_argument on N_e < 1, N_p < 4 or t_max < 1.
  void validate() const;
};

struct RunReport {
  Individual best_individual;
  double best_objective = 0.0;
  std::vector<double> objective_trace;  // global best after each iteration
  std::size_t exact_eval_count = 0;
  std::size_t surrogate_eval_count = 0;
  std::size_t iterations_run = 0;
  std::size_t restarts = 0;
  std::size_t restart_replacements = 0;
  double wall_time_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// Fitness model used for everything that is not exactly evaluated.
class FitnessApproximator {
 public:
  virtual ~FitnessApproximator() = default;
  virtual void fit(const TrainingSet& set) = 0;
  virtual double predict(const Individual& ind) const = 0;
};

/// ELM refitted from scratch on every call to fit().
class ElmApproximator final : public FitnessApproximator {
 public:
  ElmApproximator(std::size_t input_dim, std::uint64_t seed, const SurrogateConfig& cfg);

  void fit(const TrainingSet& set) override;
  double predict(const Individual& ind) const override;

  const ElmModel& model() const noexcept { return model_; }

 private:
  std::size_t input_dim_;
  std::uint64_t seed_;
  SurrogateConfig cfg_;
  ElmModel model_;
};

/// Hybrid evolutionary algorithm with ELM fitness approximation.
RunReport hea_fa_run(const Instance& inst, const EngineConfig& cfg);

/// Same loop with an injected fitness model (for testing).
RunReport hea_fa_run(const Instance& inst, const EngineConfig& cfg, FitnessApproximator& approx);

/// Plain GA: every offspring evaluated exactly, no surrogate, no local search.
RunReport baseline_ga_run(const Instance& inst, const EngineConfig& cfg);

/// Dispatches on cfg.mode.
RunReport run_engine(const Instance& inst, const EngineConfig& cfg);

}  // namespace tscflp
