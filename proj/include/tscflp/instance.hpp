#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace tscflp {

using Units = std::int64_t;

inline constexpr const char* kGeneratorVersion = "tscflp-gen-1";
inline constexpr int kCustomClass = 0;

/// Row-major dense matrix of integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Units fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Units& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Units operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Units>& data() const noexcept { return data_; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Units> data_;
};

struct InstanceMeta {
  int class_id = kCustomClass;  // 1..5, or kCustomClass
  std::uint64_t seed = 0;
  std::string generator_version = kGeneratorVersion;

  bool operator==(const InstanceMeta&) const = default;
};

/// Two-stage capacitated facility location data.
///
/// Plants I ship to depots J, depots ship to customers K. All cost and
/// capacity data are integral.
struct Instance {
  std::vector<Units> plant_fixed_cost;     // f, |I|
  std::vector<Units> plant_capacity;       // b, |I|
  std::vector<Units> depot_fixed_cost;     // g, |J|
  std::vector<Units> depot_capacity;       // p, |J|
  IntMatrix plant_depot_cost;              // c, |I| x |J|
  IntMatrix depot_customer_cost;           // d, |J| x |K|
  std::vector<Units> demand;               // q, |K|
  InstanceMeta meta;

  std::size_t n_plants() const noexcept { return plant_capacity.size(); }
  std::size_t n_depots() const noexcept { return depot_capacity.size(); }
  std::size_t n_customers() const noexcept { return demand.size(); }

  Units total_demand() const noexcept;
  Units total_plant_capacity() const noexcept;
  Units total_depot_capacity() const noexcept;

  bool operator==(const Instance&) const = default;
};

/// Throws ValidationError if shapes disagree, any value is non-positive, or
/// total plant/depot capacity falls short of total demand.
void validate(const Instance& inst);

/// Open/close decision over plants (y) and depots (z).
struct Individual {
  std::vector<std::uint8_t> y;
  std::vector<std::uint8_t> z;

  Individual() = default;
  Individual(std::size_t n_plants, std::size_t n_depots) : y(n_plants, 0), z(n_depots, 0) {}
  Individual(std::vector<std::uint8_t> plants, std::vector<std::uint8_t> depots)
      : y(std::move(plants)), z(std::move(depots)) {}

  static Individual all_open(std::size_t n_plants, std::size_t n_depots) {
    return {std::vector<std::uint8_t>(n_plants, 1), std::vector<std::uint8_t>(n_depots, 1)};
  }

  std::size_t size() const noexcept { return y.size() + z.size(); }

  /// Position-wise access over the concatenation (y, z).
  std::uint8_t bit(std::size_t pos) const { return pos < y.size() ? y[pos] : z[pos - y.size()]; }
  void set_bit(std::size_t pos, std::uint8_t v) {
    if (pos < y.size()) y[pos] = v; else z[pos - y.size()] = v;
  }

  /// "1010|110011" style rendering; also accepted by parse().
  std::string to_string() const;
  static Individual parse(const std::string& text, std::size_t n_plants, std::size_t n_depots);

  auto operator<=>(const Individual&) const = default;
};

struct IndividualHash {
  std::size_t operator()(const Individual& ind) const noexcept;
};

Units open_plant_capacity(const Instance& inst, const Individual& ind);
Units open_depot_capacity(const Instance& inst, const Individual& ind);
bool is_feasible(const Instance& inst, const Individual& ind);

/// Random instance of one of the five benchmark classes.
///
/// |J| = 2|I| and |K| = 4|I|. Demands are drawn first from [10, 20]; the
/// capacity intervals scale with B = sum(q)/|I| and P = sum(q)/|J|, with the
/// scaled endpoints rounded half-up to integers. Each parameter array draws
/// from its own labelled substream of `seed`.
Instance generate_instance(int class_id, std::size_t n_plants, std::uint64_t seed);

struct ClassIntervals {
  // Capacity multipliers of B (plants) and P (depots).
  int plant_cap_lo, plant_cap_hi;
  int depot_cap_lo, depot_cap_hi;
  Units plant_fixed_lo, plant_fixed_hi;
  Units depot_fixed_lo, depot_fixed_hi;
  Units plant_depot_lo, plant_depot_hi;
  Units depot_customer_lo, depot_customer_hi;
  Units demand_lo, demand_hi;
};

const ClassIntervals& class_intervals(int class_id);

/// round(numerator / denominator) with halves rounded up; operands positive.
Units round_ratio(Units numerator, Units denominator);

std::string to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

void save_instance(const Instance& inst, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

}  // namespace tscflp
