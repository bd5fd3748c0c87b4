#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tscflp/engine.hpp"
#include "tscflp/instance.hpp"

namespace tscflp {

/// One line of the results table.
struct BenchmarkRow {
  std::string class_label;     // "1".."5", "custom", or "Average"
  std::string instance_label;  // 1-based index, empty on average rows
  double lb = 0.0;             // rounded to 0.1
  double z_min = 0.0;
  double z_avg = 0.0;
  double rpd_min = 0.0;
  double rpd_avg = 0.0;
  double time_s = 0.0;         // wall time of all runs
  std::size_t runs = 0;
  std::uint64_t seed_base = 0;
};

inline constexpr const char* kBenchmarkHeader = "class,instance,lb,z_min,z_avg,rpd_min,rpd_avg,time_s";

/// Locale-independent fixed-point rendering.
std::string format_fixed(double value, int decimals);

/// Rounds half away from zero to `decimals` places.
double round_to(double value, int decimals);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchmarkRow& row);
void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);

/// Runs the configured engine `runs` times with seeds seed, seed+1, ... and
/// summarizes against the relaxation bound.
BenchmarkRow solve_instance(const Instance& inst, EngineConfig cfg, std::size_t runs,
                            std::uint64_t seed, const std::string& instance_label = "1");

/// Seed of the generated instance `index` (1-based) of `class_id`.
std::uint64_t bench_instance_seed(std::uint64_t seed, int class_id, std::size_t index);

struct BenchOptions {
  std::vector<int> classes{1, 2, 3, 4, 5};
  std::size_t plants = 10;
  std::size_t instances_per_class = 5;
  std::size_t runs = 5;
  std::uint64_t seed = 1;
  bool class_averages = false;  // add an average row after each class
  EngineConfig engine;
};

/// Instance rows in (class, instance) order followed by one overall
/// average row (and per-class averages when requested).
std::vector<BenchmarkRow> run_bench(const BenchOptions& opts);

/// Mean of the numeric columns of `rows`, labelled `label`.
BenchmarkRow average_row(const std::vector<BenchmarkRow>& rows, const std::string& label);

struct SweepRow {
  std::size_t population = 0;
  double mean_z = 0.0;
  double mean_rpd = 0.0;
  std::size_t samples = 0;
};

inline constexpr const char* kSweepHeader = "population,mean_z,mean_rpd,samples";

/// Population-size sweep: mean objective and mean RPD over the same
/// generated instances and run seeds for every candidate size.
std::vector<SweepRow> run_sweep(const BenchOptions& opts, const std::vector<std::size_t>& populations);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace tscflp
