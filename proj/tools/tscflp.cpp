// Command-line front end: instance generation, solving, bounds, benchmarks.
//
// Exit codes: 0 success, 1 usage, 2 validation, 3 internal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tscflp/bench.hpp"
#include "tscflp/config.hpp"
#include "tscflp/engine.hpp"
#include "tscflp/errors.hpp"
#include "tscflp/evaluator.hpp"
#include "tscflp/instance.hpp"

namespace {

using namespace tscflp;

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kInternal = 3 };

// Engine flags shared by solve, bench and sweep. Flags override the config file.
struct EngineFlags {
  std::string config_path;
  std::string algo = "hea_fa";
  std::optional<std::size_t> population, iterations, non_improving, elites;
  std::vector<std::string> settings;

  void attach(CLI::App* cmd, bool with_population = true) {
    cmd->add_option("--config", config_path, "key=value file overriding engine defaults");
    cmd->add_option("--algo", algo, "hea_fa or baseline_ga")
        ->check(CLI::IsMember({"hea_fa", "baseline_ga"}));
    if (with_population) cmd->add_option("--pop", population, "population size N_p");
    cmd->add_option("--iters", iterations, "maximum iterations t_max");
    cmd->add_option("--nip", non_improving, "non-improving iteration cap");
    cmd->add_option("--elites", elites, "exactly evaluated elites per iteration");
    cmd->add_option("--set", settings, "extra key=value engine setting (repeatable)");
  }

  EngineConfig build() const {
    EngineConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    for (const auto& s : settings) apply_config_text(cfg, s);
    cfg.mode = parse_engine_mode(algo);
    if (population) cfg.population = *population;
    if (iterations) cfg.max_iterations = *iterations;
    if (non_improving) cfg.max_non_improving = *non_improving;
    if (elites) cfg.elites = *elites;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    return cfg;
  }
};

// Writes to `path`, or stdout when empty.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  fn(out);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("invalid list entry '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Two-stage capacitated facility location: generator, solvers and benchmarks"};
  app.require_subcommand(1);

  // gen
  int gen_class = 1;
  std::size_t gen_plants = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a benchmark instance");
  gen->add_option("--class", gen_class, "instance class 1..5")->check(CLI::Range(1, 5));
  gen->add_option("--plants", gen_plants, "number of plants |I|")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output JSON path")->required();

  // solve
  std::string solve_instance_path, solve_out;
  std::size_t solve_runs = 5;
  std::uint64_t solve_seed = 1;
  EngineFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "run an engine on one instance, emit one CSV row");
  solve->add_option("--instance", solve_instance_path, "instance JSON")->required();
  solve->add_option("--runs", solve_runs, "independent runs")->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_seed, "seed of the first run");
  solve->add_option("--out", solve_out, "CSV output path (default stdout)");
  solve_flags.attach(solve);

  // lb
  std::string lb_instance_path;
  auto* lb = app.add_subcommand("lb", "print the relaxation lower bound");
  lb->add_option("--instance", lb_instance_path, "instance JSON")->required();

  // eval
  std::string eval_instance_path, eval_mask;
  bool eval_flows = false;
  auto* eval = app.add_subcommand("eval", "exact objective of an open/close mask");
  eval->add_option("--instance", eval_instance_path, "instance JSON")->required();
  eval->add_option("--mask", eval_mask, "plant bits then depot bits, e.g. 101|110100")->required();
  eval->add_flag("--flows", eval_flows, "also print nonzero flows");

  // bench / sweep
  std::string bench_classes = "1,2,3,4,5", bench_out;
  std::size_t bench_plants = 10, bench_instances = 5, bench_runs = 5;
  std::uint64_t bench_seed = 1;
  bool bench_class_avg = false;
  EngineFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "generate and solve a table of instances");
  bench->add_option("--classes", bench_classes, "comma-separated class ids");
  bench->add_option("--plants", bench_plants, "plants per instance")->check(CLI::PositiveNumber);
  bench->add_option("--instances", bench_instances, "instances per class")->check(CLI::PositiveNumber);
  bench->add_option("--runs", bench_runs, "runs per instance")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_flag("--class-averages", bench_class_avg, "also emit an average row per class");
  bench_flags.attach(bench);

  std::string sweep_classes = "1", sweep_pops = "40,50,60,70,80", sweep_out;
  std::size_t sweep_plants = 10, sweep_instances = 5, sweep_runs = 5;
  std::uint64_t sweep_seed = 1;
  EngineFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "population-size sweep, mean objective and RPD");
  sweep->add_option("--classes", sweep_classes, "comma-separated class ids");
  sweep->add_option("--pops", sweep_pops, "comma-separated population sizes");
  sweep->add_option("--plants", sweep_plants, "plants per instance")->check(CLI::PositiveNumber);
  sweep->add_option("--instances", sweep_instances, "instances per class")->check(CLI::PositiveNumber);
  sweep->add_option("--runs", sweep_runs, "runs per instance and size")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "base seed");
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");
  sweep_flags.attach(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (gen->parsed()) {
    const Instance inst = generate_instance(gen_class, gen_plants, gen_seed);
    save_instance(inst, gen_out);
    std::cout << "class " << gen_class << ": " << inst.n_plants() << " plants, " << inst.n_depots()
              << " depots, " << inst.n_customers() << " customers\n"
              << "demand " << inst.total_demand() << ", plant capacity " << inst.total_plant_capacity()
              << ", depot capacity " << inst.total_depot_capacity() << ": feasible\n";
    return kOk;
  }

  if (solve->parsed()) {
    const EngineConfig cfg = solve_flags.build();
    const Instance inst = load_instance(solve_instance_path);
    const BenchmarkRow row = solve_instance(inst, cfg, solve_runs, solve_seed);
    with_output(solve_out, [&](std::ostream& out) { write_csv(out, {row}); });
    return kOk;
  }

  if (lb->parsed()) {
    const Instance inst = load_instance(lb_instance_path);
    std::cout << format_fixed(lp_lower_bound(inst), 1) << '\n';
    return kOk;
  }

  if (eval->parsed()) {
    const Instance inst = load_instance(eval_instance_path);
    const Individual ind = Individual::parse(eval_mask, inst.n_plants(), inst.n_depots());
    const auto sol = evaluate_exact(inst, ind);
    std::cout << "objective " << sol.objective_exact << "\nfixed " << sol.fixed_cost
              << "\ntransport " << sol.flows.cost << '\n';
    if (eval_flows) {
      const auto& net = sol.network;
      for (std::size_t i = 0; i < net.n_plants(); ++i)
        for (std::size_t j = 0; j < net.n_depots(); ++j)
          if (sol.flows.x(i, j) > 0)
            std::cout << "x plant " << net.plant_ids[i] + 1 << " depot " << net.depot_ids[j] + 1
                      << ' ' << sol.flows.x(i, j) << '\n';
      for (std::size_t j = 0; j < net.n_depots(); ++j)
        for (std::size_t k = 0; k < net.n_customers(); ++k)
          if (sol.flows.s(j, k) > 0)
            std::cout << "s depot " << net.depot_ids[j] + 1 << " customer " << k + 1 << ' '
                      << sol.flows.s(j, k) << '\n';
    }
    return kOk;
  }

  if (bench->parsed()) {
    BenchOptions opts;
    opts.classes = parse_int_list(bench_classes);
    for (int c : opts.classes)
      if (c < 1 || c > 5) throw ConfigError("class ids must be in 1..5");
    opts.plants = bench_plants;
    opts.instances_per_class = bench_instances;
    opts.runs = bench_runs;
    opts.seed = bench_seed;
    opts.class_averages = bench_class_avg;
    opts.engine = bench_flags.build();
    const auto rows = run_bench(opts);
    with_output(bench_out, [&](std::ostream& out) { write_csv(out, rows); });
    return kOk;
  }

  if (sweep->parsed()) {
    BenchOptions opts;
    opts.classes = parse_int_list(sweep_classes);
    for (int c : opts.classes)
      if (c < 1 || c > 5) throw ConfigError("class ids must be in 1..5");
    std::vector<std::size_t> pops;
    for (int p : parse_int_list(sweep_pops)) {
      if (p < 4) throw ConfigError("population sizes must be >= 4");
      pops.push_back(static_cast<std::size_t>(p));
    }
    opts.plants = sweep_plants;
    opts.instances_per_class = sweep_instances;
    opts.runs = sweep_runs;
    opts.seed = sweep_seed;
    opts.engine = sweep_flags.build();
    const auto rows = run_sweep(opts, pops);
    with_output(sweep_out, [&](std::ostream& out) { write_sweep_csv(out, rows); });
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tscflp::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const tscflp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kValidation;
  } catch (const tscflp::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const tscflp::InfeasibleError& e) {
    std::cerr << "infeasible (" << e.stage() << "): " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
