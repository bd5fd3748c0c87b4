#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles.hpp"
#include "tscflp/bench.hpp"
#include "tscflp/config.hpp"
#include "tscflp/evaluator.hpp"

using namespace tscflp;

namespace {

const std::filesystem::path kDir = [] {
  const auto dir = std::filesystem::temp_directory_path() / "tscflp-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}();

int cli(const std::string& args) {
  const std::string cmd = std::string(TSCFLP_CLI_PATH) + " " + args + " >" + (kDir / "stdout.txt").string() +
                          " 2>" + (kDir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) out.push_back(c);
  return out;
}

std::string path(const std::string& name) { return (kDir / name).string(); }

}  // namespace

TEST_CASE("config text overrides defaults") {
  EngineConfig cfg;
  apply_config_text(cfg,
                    "# tuning\n"
                    "population = 40\n"
                    "max_iterations=10   # short\n"
                    "pc_min=0.6\n"
                    "activation=tanh\n"
                    "local_search=false\n"
                    "ls_compare=mixed\n"
                    "depot_index=all_plants\n"
                    "\n");
  CHECK(cfg.population == 40);
  CHECK(cfg.max_iterations == 10);
  CHECK(cfg.operators.pc_min == 0.6);
  CHECK(cfg.surrogate.activation == Activation::tanh);
  CHECK_FALSE(cfg.surrogate.local_search);
  CHECK(cfg.surrogate.ls_compare == LsCompare::mixed);
  CHECK(cfg.mih.depot_index == DepotIndexMode::all_plants);
  CHECK_THROWS_AS(apply_config_text(cfg, "colour=blue"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(cfg, "population"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(cfg, "population=-3"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(cfg, "pm_max=1.5"), ConfigError);
  CHECK_THROWS_AS(apply_config_file(cfg, kDir / "missing.cfg"), ConfigError);
}

TEST_CASE("numbers render without locale effects") {
  CHECK(format_fixed(1234567.25, 1) == "1234567.3");
  CHECK(format_fixed(0.125, 2) == "0.13");
  CHECK(format_fixed(-0.001, 2) == "0.00");
  CHECK(format_fixed(12.0, 2) == "12.00");
}

TEST_CASE("csv header contract") {
  std::ostringstream out;
  write_csv(out, {});
  CHECK(out.str() == "class,instance,lb,z_min,z_avg,rpd_min,rpd_avg,time_s\n");
}

TEST_CASE("solve row is internally consistent") {
  const Instance inst = generate_instance(1, 4, 3);
  EngineConfig cfg;
  cfg.max_iterations = 20;
  const BenchmarkRow one = solve_instance(inst, cfg, 1, 9);
  CHECK(one.z_min == one.z_avg);
  const BenchmarkRow row = solve_instance(inst, cfg, 3, 9);
  CHECK(row.z_min <= row.z_avg);
  CHECK(row.lb == round_to(lp_lower_bound(inst), 1));
  CHECK(round_to(row.rpd_min, 2) == round_to((row.z_min - row.lb) * 100.0 / row.lb, 2));
  CHECK(round_to(row.rpd_avg, 2) == round_to((row.z_avg - row.lb) * 100.0 / row.lb, 2));
  CHECK(row.runs == 3);
  CHECK(row.class_label == "1");
}

TEST_CASE("rpd on an enumerable instance uses the true optimum") {
  const Instance inst = oracle::desk_instance(2, 4);
  const auto opt = oracle::enumerate_optimum(inst);
  const BenchmarkRow row = solve_instance(inst, EngineConfig{}, 3, 1);
  const double lb = round_to(lp_lower_bound(inst), 1);
  CHECK(row.z_min == static_cast<double>(opt.value));
  CHECK(std::abs(row.rpd_min - (static_cast<double>(opt.value) - lb) * 100.0 / lb) <= 0.01);
}

TEST_CASE("bench rows and averages") {
  BenchOptions opts;
  opts.plants = 2;
  opts.instances_per_class = 5;
  opts.runs = 2;
  opts.engine.population = 10;
  opts.engine.max_iterations = 5;
  const auto rows = run_bench(opts);
  REQUIRE(rows.size() == 26);
  CHECK(rows.back().class_label == "Average");
  for (std::size_t r = 0; r < 25; ++r) {
    CHECK(rows[r].class_label == std::to_string(1 + r / 5));
    CHECK(rows[r].instance_label == std::to_string(1 + r % 5));
  }
  double rpd_sum = 0.0;
  for (std::size_t r = 0; r < 25; ++r) rpd_sum += rows[r].rpd_avg;
  CHECK(round_to(rows.back().rpd_avg, 2) == round_to(rpd_sum / 25.0, 2));

  opts.class_averages = true;
  opts.classes = {2, 4};
  const auto grouped = run_bench(opts);
  REQUIRE(grouped.size() == 13);
  CHECK(grouped[5].class_label == "Average");
  CHECK(grouped[5].instance_label == "class 2");
  double z = 0.0;
  for (std::size_t r = 0; r < 5; ++r) z += grouped[r].z_avg;
  CHECK(round_to(grouped[5].z_avg, 2) == round_to(z / 5.0, 2));
}

TEST_CASE("gen writes identical, loadable files") {
  REQUIRE(cli("gen --class 1 --plants 10 --seed 7 --out " + path("a.json")) == 0);
  REQUIRE(cli("gen --class 1 --plants 10 --seed 7 --out " + path("b.json")) == 0);
  CHECK(slurp(kDir / "a.json") == slurp(kDir / "b.json"));
  const Instance inst = load_instance(kDir / "a.json");
  for (auto f : inst.plant_fixed_cost) CHECK((f >= 20000 && f <= 30000));
  for (auto d : inst.depot_customer_cost.data()) CHECK((d >= 55 && d <= 65));
}

TEST_CASE("exit codes") {
  CHECK(cli("gen --class 9 --out " + path("bad.json")) == 1);
  CHECK(cli("frobnicate") == 1);
  CHECK(cli("solve --instance " + path("a.json") + " --pop 2") == 1);
  CHECK(cli("solve --instance " + path("a.json") + " --set colour=blue") == 1);

  std::ofstream(kDir / "short.json") << "{\"version\": \"tscflp-gen-1\"}";
  CHECK(cli("lb --instance " + path("short.json")) == 2);
  CHECK(slurp(kDir / "stderr.txt").find("missing required key") != std::string::npos);
  CHECK(cli("lb --instance " + path("nowhere.json")) == 2);

  REQUIRE(cli("gen --class 2 --plants 2 --seed 1 --out " + path("small.json")) == 0);
  CHECK(cli("eval --instance " + path("small.json") + " --mask '00|0000'") == 2);
  CHECK(cli("eval --instance " + path("small.json") + " --mask '11|1111' --flows") == 0);
  CHECK(slurp(kDir / "stdout.txt").find("objective ") == 0);
}

TEST_CASE("lb, eval and solve agree with the library") {
  REQUIRE(cli("gen --class 3 --plants 2 --seed 5 --out " + path("c.json")) == 0);
  const Instance inst = load_instance(kDir / "c.json");
  REQUIRE(cli("lb --instance " + path("c.json")) == 0);
  CHECK(slurp(kDir / "stdout.txt") == format_fixed(lp_lower_bound(inst), 1) + "\n");

  const Individual all = Individual::all_open(2, 4);
  REQUIRE(cli("eval --instance " + path("c.json") + " --mask '" + all.to_string() + "'") == 0);
  CHECK(lines(slurp(kDir / "stdout.txt"))[0] ==
        "objective " + std::to_string(evaluate_exact(inst, all).objective_exact));

  std::ofstream(kDir / "engine.cfg") << "population=12\nmax_iterations=4\n";
  REQUIRE(cli("solve --instance " + path("c.json") + " --runs 2 --seed 3 --config " + path("engine.cfg") +
              " --iters 6 --out " + path("solve.csv")) == 0);
  const auto out = lines(slurp(kDir / "solve.csv"));
  REQUIRE(out.size() == 2);
  CHECK(out[0] == kBenchmarkHeader);
  EngineConfig cfg;
  cfg.population = 12;
  cfg.max_iterations = 6;
  const auto row = solve_instance(inst, cfg, 2, 3);
  const auto got = cells(out[1]);
  REQUIRE(got.size() == 8);
  CHECK(got[2] == format_fixed(row.lb, 1));
  CHECK(got[3] == format_fixed(row.z_min, 1));
  CHECK(got[4] == format_fixed(row.z_avg, 1));
}

TEST_CASE("bench and sweep from the command line") {
  const std::string flags = "--classes 1,3 --plants 2 --instances 2 --runs 1 --seed 4 --pop 8 --iters 3";
  REQUIRE(cli("bench " + flags + " --out " + path("bench1.csv")) == 0);
  REQUIRE(cli("bench " + flags + " --out " + path("bench2.csv")) == 0);
  const auto a = lines(slurp(kDir / "bench1.csv")), b = lines(slurp(kDir / "bench2.csv"));
  REQUIRE(a.size() == 6);
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto ca = cells(a[i]), cb = cells(b[i]);
    ca.pop_back();
    cb.pop_back();
    CHECK(ca == cb);
  }
  CHECK(cli("bench --classes 1,7") == 1);

  REQUIRE(cli("sweep --classes 1 --pops 8,12 --plants 2 --instances 1 --runs 1 --iters 3 --out " +
              path("sweep.csv")) == 0);
  const auto s = lines(slurp(kDir / "sweep.csv"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == kSweepHeader);
  CHECK(s[1].rfind("8,", 0) == 0);
}
