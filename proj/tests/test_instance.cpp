#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "tscflp/errors.hpp"
#include "tscflp/instance.hpp"

using namespace tscflp;

namespace {

bool within(const std::vector<Units>& v, Units lo, Units hi) {
  for (auto x : v)
    if (x < lo || x > hi) return false;
  return true;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tscflp-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("class 1 draws stay inside their intervals") {
  const Instance inst = generate_instance(1, 10, 7);
  CHECK(within(inst.plant_fixed_cost, 20000, 30000));
  CHECK(within(inst.plant_depot_cost.data(), 35, 45));
  CHECK(within(inst.depot_customer_cost.data(), 55, 65));
  CHECK(inst.n_depots() == 20);
  CHECK(inst.n_customers() == 40);
}

TEST_CASE("class 3 customer costs are in [800, 1000]") {
  const Instance inst = generate_instance(3, 6, 99);
  CHECK(within(inst.depot_customer_cost.data(), 800, 1000));
}

TEST_CASE("every class respects its intervals over 1000 instances") {
  for (int cls = 1; cls <= 5; ++cls) {
    const ClassIntervals& k = class_intervals(cls);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const std::size_t plants = 1 + seed % 5;
      const Instance inst = generate_instance(cls, plants, seed);
      const Units total = inst.total_demand();
      const auto ni = static_cast<Units>(inst.n_plants()), nj = static_cast<Units>(inst.n_depots());
      // Endpoints recomputed with plain double rounding.
      auto scaled = [total](int mult, Units count) {
        return static_cast<Units>(std::floor(static_cast<double>(mult) * static_cast<double>(total) /
                                                 static_cast<double>(count) + 0.5));
      };
      REQUIRE(within(inst.demand, k.demand_lo, k.demand_hi));
      REQUIRE(within(inst.plant_capacity, scaled(k.plant_cap_lo, ni), scaled(k.plant_cap_hi, ni)));
      REQUIRE(within(inst.depot_capacity, scaled(k.depot_cap_lo, nj), scaled(k.depot_cap_hi, nj)));
      REQUIRE(within(inst.plant_fixed_cost, k.plant_fixed_lo, k.plant_fixed_hi));
      REQUIRE(within(inst.depot_fixed_cost, k.depot_fixed_lo, k.depot_fixed_hi));
      REQUIRE(within(inst.plant_depot_cost.data(), k.plant_depot_lo, k.plant_depot_hi));
      REQUIRE(within(inst.depot_customer_cost.data(), k.depot_customer_lo, k.depot_customer_hi));
      REQUIRE(inst.total_plant_capacity() >= total);
      REQUIRE(inst.total_depot_capacity() >= total);
    }
  }
}

TEST_CASE("interval endpoints") {
  CHECK(class_intervals(1).plant_cap_lo == 2);
  CHECK(class_intervals(2).plant_cap_hi == 10);
  CHECK(class_intervals(3).plant_cap_lo == 15);
  CHECK(class_intervals(3).depot_customer_lo == 800);
  CHECK(class_intervals(4).plant_depot_hi == 100);
  CHECK(class_intervals(5).depot_customer_hi == 1000);
  CHECK_THROWS_AS(class_intervals(0), std::invalid_argument);
  CHECK_THROWS_AS(class_intervals(6), std::invalid_argument);
}

TEST_CASE("round_ratio rounds halves up") {
  CHECK(round_ratio(5, 2) == 3);
  CHECK(round_ratio(7, 2) == 4);
  CHECK(round_ratio(4, 3) == 1);
  CHECK(round_ratio(5, 3) == 2);
  CHECK(round_ratio(6, 3) == 2);
}

TEST_CASE("generation is deterministic and seed-sensitive") {
  CHECK(to_json(generate_instance(2, 5, 11)) == to_json(generate_instance(2, 5, 11)));
  CHECK_FALSE(generate_instance(2, 5, 11) == generate_instance(2, 5, 12));
}

TEST_CASE("save then load round-trips") {
  const Instance inst = generate_instance(4, 4, 3);
  const auto path = scratch("roundtrip.json");
  save_instance(inst, path);
  CHECK(load_instance(path) == inst);
  CHECK(instance_from_json(to_json(inst)) == inst);
}

TEST_CASE("missing key is reported by name") {
  auto doc = nlohmann::json::parse(to_json(generate_instance(1, 2, 1)));
  doc.erase("q");
  try {
    instance_from_json(doc.dump());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.key() == "q");
    CHECK(std::string(e.what()).find("q") != std::string::npos);
  }
}

TEST_CASE("wrongly typed and shaped fields are rejected") {
  auto doc = nlohmann::json::parse(to_json(generate_instance(1, 2, 1)));
  doc["b"] = "lots";
  CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
  CHECK_THROWS_AS(instance_from_json("{not json"), ParseError);
  doc = nlohmann::json::parse(to_json(generate_instance(1, 2, 1)));
  doc["f"].push_back(1);
  CHECK_THROWS_AS(instance_from_json(doc.dump()), ParseError);
}

TEST_CASE("insufficient plant capacity fails validation") {
  auto doc = nlohmann::json::parse(to_json(generate_instance(1, 2, 1)));
  for (auto& b : doc["b"]) b = 1;
  CHECK_THROWS_AS(instance_from_json(doc.dump()), ValidationError);
}

TEST_CASE("non-positive data fails validation") {
  Instance inst = generate_instance(1, 2, 1);
  inst.depot_fixed_cost[0] = 0;
  CHECK_THROWS_AS(validate(inst), ValidationError);
}

TEST_CASE("missing file is a parse error") {
  CHECK_THROWS_AS(load_instance(scratch("does-not-exist.json")), ParseError);
}

TEST_CASE("individual text form") {
  const Individual ind({1, 0, 1}, {0, 1});
  CHECK(ind.to_string() == "101|01");
  CHECK(Individual::parse("101|01", 3, 2) == ind);
  CHECK(Individual::parse("10101", 3, 2) == ind);
  CHECK_THROWS_AS(Individual::parse("1010", 3, 2), ValidationError);
  CHECK_THROWS_AS(Individual::parse("10x01", 3, 2), ValidationError);
  CHECK(ind.bit(3) == 0);
  CHECK(ind.bit(4) == 1);
}

TEST_CASE("feasibility follows open capacity") {
  const Instance inst = generate_instance(1, 3, 5);
  CHECK(is_feasible(inst, Individual::all_open(3, 6)));
  CHECK_FALSE(is_feasible(inst, Individual(3, 6)));
}
