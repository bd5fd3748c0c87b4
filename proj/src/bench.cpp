#include "tscflp/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "tscflp/evaluator.hpp"
#include "tscflp/rng.hpp"

namespace tscflp {

std::string format_fixed(double value, int decimals) {
  value = round_to(value, decimals);
  if (value == 0.0) value = 0.0;  // no "-0.00"
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return {buf, ptr};
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

void write_csv_header(std::ostream& out) { out << kBenchmarkHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchmarkRow& row) {
  out << row.class_label << ',' << row.instance_label << ',' << format_fixed(row.lb, 1) << ','
      << format_fixed(row.z_min, 1) << ',' << format_fixed(row.z_avg, 1) << ','
      << format_fixed(row.rpd_min, 2) << ',' << format_fixed(row.rpd_avg, 2) << ','
      << format_fixed(row.time_s, 2) << '\n';
}

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  write_csv_header(out);
  for (const auto& row : rows) write_csv_row(out, row);
}

BenchmarkRow solve_instance(const Instance& inst, EngineConfig cfg, std::size_t runs,
                            std::uint64_t seed, const std::string& instance_label) {
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  BenchmarkRow row;
  row.class_label = inst.meta.class_id == kCustomClass ? "custom" : std::to_string(inst.meta.class_id);
  row.instance_label = instance_label;
  row.runs = runs;
  row.seed_base = seed;

  const auto started = std::chrono::steady_clock::now();
  row.lb = round_to(lp_lower_bound(inst), 1);
  double z_min = std::numeric_limits<double>::infinity(), z_sum = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    cfg.seed = seed + r;
    const RunReport report = run_engine(inst, cfg);
    z_min = std::min(z_min, report.best_objective);
    z_sum += report.best_objective;
  }
  row.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  row.z_min = z_min;
  row.z_avg = z_sum / static_cast<double>(runs);
  row.rpd_min = rpd(row.z_min, row.lb);
  row.rpd_avg = rpd(row.z_avg, row.lb);
  return row;
}

std::uint64_t bench_instance_seed(std::uint64_t seed, int class_id, std::size_t index) {
  std::uint64_t state = seed ^ (static_cast<std::uint64_t>(class_id) << 32) ^ index;
  return splitmix64(state);
}

BenchmarkRow average_row(const std::vector<BenchmarkRow>& rows, const std::string& label) {
  BenchmarkRow avg;
  avg.class_label = label;
  if (rows.empty()) return avg;
  for (const auto& r : rows) {
    avg.lb += r.lb;
    avg.z_min += r.z_min;
    avg.z_avg += r.z_avg;
    avg.rpd_min += r.rpd_min;
    avg.rpd_avg += r.rpd_avg;
    avg.time_s += r.time_s;
    avg.runs += r.runs;
  }
  const auto n = static_cast<double>(rows.size());
  avg.lb /= n;
  avg.z_min /= n;
  avg.z_avg /= n;
  avg.rpd_min /= n;
  avg.rpd_avg /= n;
  avg.time_s /= n;
  avg.seed_base = rows.front().seed_base;
  return avg;
}

std::vector<BenchmarkRow> run_bench(const BenchOptions& opts) {
  std::vector<BenchmarkRow> out, all;
  for (int class_id : opts.classes) {
    std::vector<BenchmarkRow> class_rows;
    for (std::size_t idx = 1; idx <= opts.instances_per_class; ++idx) {
      const Instance inst =
          generate_instance(class_id, opts.plants, bench_instance_seed(opts.seed, class_id, idx));
      class_rows.push_back(solve_instance(inst, opts.engine, opts.runs, opts.seed, std::to_string(idx)));
    }
    out.insert(out.end(), class_rows.begin(), class_rows.end());
    all.insert(all.end(), class_rows.begin(), class_rows.end());
    if (opts.class_averages) {
      auto avg = average_row(class_rows, "Average");
      avg.instance_label = "class " + std::to_string(class_id);
      out.push_back(avg);
    }
  }
  out.push_back(average_row(all, "Average"));
  return out;
}

std::vector<SweepRow> run_sweep(const BenchOptions& opts, const std::vector<std::size_t>& populations) {
  std::vector<Instance> instances;
  std::vector<double> bounds;
  for (int class_id : opts.classes)
    for (std::size_t idx = 1; idx <= opts.instances_per_class; ++idx) {
      instances.push_back(
          generate_instance(class_id, opts.plants, bench_instance_seed(opts.seed, class_id, idx)));
      bounds.push_back(lp_lower_bound(instances.back()));
    }

  std::vector<SweepRow> rows;
  for (std::size_t pop : populations) {
    EngineConfig cfg = opts.engine;
    cfg.population = pop;
    SweepRow row;
    row.population = pop;
    for (std::size_t i = 0; i < instances.size(); ++i)
      for (std::size_t r = 0; r < opts.runs; ++r) {
        cfg.seed = opts.seed + r;
        const double z = run_engine(instances[i], cfg).best_objective;
        row.mean_z += z;
        row.mean_rpd += rpd(z, bounds[i]);
        ++row.samples;
      }
    if (row.samples > 0) {
      row.mean_z /= static_cast<double>(row.samples);
      row.mean_rpd /= static_cast<double>(row.samples);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows)
    out << r.population << ',' << format_fixed(r.mean_z, 1) << ',' << format_fixed(r.mean_rpd, 2)
        << ',' << r.samples << '\n';
}

}  // namespace tscflp
