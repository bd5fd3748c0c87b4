#include "tscflp/instance.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tscflp/errors.hpp"
#include "tscflp/rng.hpp"

namespace tscflp {

namespace {

Units sum_of(const std::vector<Units>& v) { return std::accumulate(v.begin(), v.end(), Units{0}); }

// Rows are classes 1..5, fields in ClassIntervals order.
const std::array<ClassIntervals, 5> kClasses = {{
    {2, 5, 2, 5, 20000, 30000, 8000, 12000, 35, 45, 55, 65, 10, 20},
    {5, 10, 5, 10, 20000, 30000, 8000, 12000, 35, 45, 55, 65, 10, 20},
    {15, 25, 15, 25, 20000, 30000, 8000, 12000, 35, 45, 800, 1000, 10, 20},
    {5, 10, 5, 10, 20000, 30000, 8000, 12000, 50, 100, 50, 100, 10, 20},
    {5, 10, 5, 10, 20000, 30000, 8000, 12000, 35, 45, 800, 1000, 10, 20},
}};

std::vector<Units> draw_vector(Rng rng, std::size_t n, Units lo, Units hi) {
  std::vector<Units> out(n);
  for (auto& v : out) v = rng.uniform_int(lo, hi);
  return out;
}

IntMatrix draw_matrix(Rng rng, std::size_t rows, std::size_t cols, Units lo, Units hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform_int(lo, hi);
  return m;
}

bool all_positive(const std::vector<Units>& v) {
  return std::all_of(v.begin(), v.end(), [](Units x) { return x > 0; });
}

}  // namespace

Units Instance::total_demand() const noexcept { return sum_of(demand); }
Units Instance::total_plant_capacity() const noexcept { return sum_of(plant_capacity); }
Units Instance::total_depot_capacity() const noexcept { return sum_of(depot_capacity); }

void validate(const Instance& inst) {
  const auto ni = inst.n_plants(), nj = inst.n_depots(), nk = inst.n_customers();
  if (ni == 0 || nj == 0 || nk == 0)
    throw ValidationError("instance needs at least one plant, depot and customer");
  if (inst.plant_fixed_cost.size() != ni)
    throw ValidationError("f has length " + std::to_string(inst.plant_fixed_cost.size()) +
                          ", expected " + std::to_string(ni));
  if (inst.depot_fixed_cost.size() != nj)
    throw ValidationError("g has length " + std::to_string(inst.depot_fixed_cost.size()) +
                          ", expected " + std::to_string(nj));
  if (inst.plant_depot_cost.rows() != ni || inst.plant_depot_cost.cols() != nj)
    throw ValidationError("c must be |I| x |J|");
  if (inst.depot_customer_cost.rows() != nj || inst.depot_customer_cost.cols() != nk)
    throw ValidationError("d must be |J| x |K|");

  const std::array<std::pair<const char*, const std::vector<Units>*>, 7> arrays = {{
      {"f", &inst.plant_fixed_cost},
      {"b", &inst.plant_capacity},
      {"g", &inst.depot_fixed_cost},
      {"p", &inst.depot_capacity},
      {"q", &inst.demand},
      {"c", &inst.plant_depot_cost.data()},
      {"d", &inst.depot_customer_cost.data()},
  }};
  for (const auto& [name, values] : arrays)
    if (!all_positive(*values)) throw ValidationError(std::string(name) + " must be strictly positive");

  const Units demand = inst.total_demand();
  if (inst.total_plant_capacity() < demand)
    throw ValidationError("infeasible instance: total plant capacity " +
                          std::to_string(inst.total_plant_capacity()) + " < total demand " +
                          std::to_string(demand));
  if (inst.total_depot_capacity() < demand)
    throw ValidationError("infeasible instance: total depot capacity " +
                          std::to_string(inst.total_depot_capacity()) + " < total demand " +
                          std::to_string(demand));
}

std::string Individual::to_string() const {
  std::string out;
  out.reserve(size() + 1);
  for (auto v : y) out.push_back(v ? '1' : '0');
  out.push_back('|');
  for (auto v : z) out.push_back(v ? '1' : '0');
  return out;
}

Individual Individual::parse(const std::string& text, std::size_t n_plants, std::size_t n_depots) {
  std::string bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') bits.push_back(ch);
    else if (ch != '|' && ch != ' ' && ch != ',')
      throw ValidationError(std::string("mask contains invalid character '") + ch + "'");
  }
  if (bits.size() != n_plants + n_depots)
    throw ValidationError("mask has " + std::to_string(bits.size()) + " bits, expected " +
                          std::to_string(n_plants + n_depots));
  Individual ind(n_plants, n_depots);
  for (std::size_t pos = 0; pos < bits.size(); ++pos) ind.set_bit(pos, bits[pos] == '1');
  return ind;
}

std::size_t IndividualHash::operator()(const Individual& ind) const noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto mix = [&h](std::uint8_t v) {
    h ^= v;
    h *= 0x100000001B3ULL;
  };
  for (auto v : ind.y) mix(v);
  mix(2);
  for (auto v : ind.z) mix(v);
  return static_cast<std::size_t>(h);
}

Units open_plant_capacity(const Instance& inst, const Individual& ind) {
  Units cap = 0;
  for (std::size_t i = 0; i < inst.n_plants(); ++i)
    if (ind.y[i]) cap += inst.plant_capacity[i];
  return cap;
}

Units open_depot_capacity(const Instance& inst, const Individual& ind) {
  Units cap = 0;
  for (std::size_t j = 0; j < inst.n_depots(); ++j)
    if (ind.z[j]) cap += inst.depot_capacity[j];
  return cap;
}

bool is_feasible(const Instance& inst, const Individual& ind) {
  const Units demand = inst.total_demand();
  return open_plant_capacity(inst, ind) >= demand && open_depot_capacity(inst, ind) >= demand;
}

const ClassIntervals& class_intervals(int class_id) {
  if (class_id < 1 || class_id > 5)
    throw std::invalid_argument("class id must be in 1..5, got " + std::to_string(class_id));
  return kClasses[static_cast<std::size_t>(class_id - 1)];
}

Units round_ratio(Units numerator, Units denominator) {
  return (2 * numerator + denominator) / (2 * denominator);
}

Instance generate_instance(int class_id, std::size_t n_plants, std::uint64_t seed) {
  if (n_plants < 1) throw std::invalid_argument("n_plants must be >= 1");
  const ClassIntervals& cls = class_intervals(class_id);
  const std::size_t ni = n_plants, nj = 2 * n_plants, nk = 4 * n_plants;

  Instance inst;
  inst.demand = draw_vector(Rng::substream(seed, "q"), nk, cls.demand_lo, cls.demand_hi);
  const Units total = inst.total_demand();
  const auto plants = static_cast<Units>(ni), depots = static_cast<Units>(nj);

  // B = total/|I|, P = total/|J|; endpoints k*B rounded half-up.
  inst.plant_capacity = draw_vector(Rng::substream(seed, "b"), ni,
                                    round_ratio(cls.plant_cap_lo * total, plants),
                                    round_ratio(cls.plant_cap_hi * total, plants));
  inst.depot_capacity = draw_vector(Rng::substream(seed, "p"), nj,
                                    round_ratio(cls.depot_cap_lo * total, depots),
                                    round_ratio(cls.depot_cap_hi * total, depots));
  inst.plant_fixed_cost =
      draw_vector(Rng::substream(seed, "f"), ni, cls.plant_fixed_lo, cls.plant_fixed_hi);
  inst.depot_fixed_cost =
      draw_vector(Rng::substream(seed, "g"), nj, cls.depot_fixed_lo, cls.depot_fixed_hi);
  inst.plant_depot_cost =
      draw_matrix(Rng::substream(seed, "c"), ni, nj, cls.plant_depot_lo, cls.plant_depot_hi);
  inst.depot_customer_cost = draw_matrix(Rng::substream(seed, "d"), nj, nk,
                                         cls.depot_customer_lo, cls.depot_customer_hi);
  inst.meta = {class_id, seed, kGeneratorVersion};

  validate(inst);
  return inst;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

const ordered_json& require(const ordered_json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(key, "missing required key");
  return *it;
}

Units parse_integer(const ordered_json& v, const char* key) {
  if (!v.is_number_integer()) throw ParseError(key, "expected an integer, got " + v.dump());
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(key, "integer out of range");
  return v.get<Units>();
}

std::size_t parse_count(const ordered_json& doc, const char* key) {
  const Units v = parse_integer(require(doc, key), key);
  if (v < 1) throw ParseError(key, "count must be >= 1");
  return static_cast<std::size_t>(v);
}

std::vector<Units> parse_vector(const ordered_json& doc, const char* key, std::size_t expected) {
  const auto& v = require(doc, key);
  if (!v.is_array()) throw ParseError(key, "expected an array");
  if (v.size() != expected)
    throw ParseError(key, "expected " + std::to_string(expected) + " entries, got " +
                              std::to_string(v.size()));
  std::vector<Units> out;
  out.reserve(expected);
  for (const auto& e : v) out.push_back(parse_integer(e, key));
  return out;
}

IntMatrix parse_matrix(const ordered_json& doc, const char* key, std::size_t rows, std::size_t cols) {
  const auto& v = require(doc, key);
  if (!v.is_array() || v.size() != rows)
    throw ParseError(key, "expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = v[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(key, "row " + std::to_string(r) + " must have " + std::to_string(cols) +
                                " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_integer(row[c], key);
  }
  return m;
}

}  // namespace

std::string to_json(const Instance& inst) {
  std::ostringstream out;
  auto field = [&out](const char* key, const ordered_json& value, bool last = false) {
    out << "  \"" << key << "\": " << value.dump() << (last ? "\n" : ",\n");
  };
  out << "{\n";
  field("version", inst.meta.generator_version);
  if (inst.meta.class_id == kCustomClass) field("class", "custom");
  else field("class", inst.meta.class_id);
  field("seed", inst.meta.seed);
  field("n_plants", inst.n_plants());
  field("n_depots", inst.n_depots());
  field("n_customers", inst.n_customers());
  field("f", inst.plant_fixed_cost);
  field("b", inst.plant_capacity);
  field("g", inst.depot_fixed_cost);
  field("p", inst.depot_capacity);
  field("q", inst.demand);
  // Matrices one row per line.
  for (const auto& [key, m] : {std::pair<const char*, const IntMatrix*>{"c", &inst.plant_depot_cost},
                               {"d", &inst.depot_customer_cost}}) {
    out << "  \"" << key << "\": [\n";
    const auto rows = matrix_json(*m);
    for (std::size_t r = 0; r < rows.size(); ++r)
      out << "    " << rows[r].dump() << (r + 1 < rows.size() ? ",\n" : "\n");
    out << (std::string(key) == "c" ? "  ],\n" : "  ]\n");
  }
  out << "}\n";
  return out.str();
}

Instance instance_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("<document>", e.what());
  }
  if (!doc.is_object()) throw ParseError("<document>", "top level must be an object");

  Instance inst;
  const auto& version = require(doc, "version");
  if (!version.is_string()) throw ParseError("version", "expected a string");
  inst.meta.generator_version = version.get<std::string>();

  const auto& cls = require(doc, "class");
  if (cls.is_string()) {
    if (cls.get<std::string>() != "custom") throw ParseError("class", "expected 1..5 or \"custom\"");
    inst.meta.class_id = kCustomClass;
  } else {
    const Units id = parse_integer(cls, "class");
    if (id < 1 || id > 5) throw ParseError("class", "expected 1..5 or \"custom\"");
    inst.meta.class_id = static_cast<int>(id);
  }

  const auto& seed = require(doc, "seed");
  if (!seed.is_number_integer()) throw ParseError("seed", "expected an integer");
  inst.meta.seed = seed.is_number_unsigned() ? seed.get<std::uint64_t>()
                                             : static_cast<std::uint64_t>(seed.get<std::int64_t>());

  const std::size_t ni = parse_count(doc, "n_plants");
  const std::size_t nj = parse_count(doc, "n_depots");
  const std::size_t nk = parse_count(doc, "n_customers");

  inst.plant_fixed_cost = parse_vector(doc, "f", ni);
  inst.plant_capacity = parse_vector(doc, "b", ni);
  inst.depot_fixed_cost = parse_vector(doc, "g", nj);
  inst.depot_capacity = parse_vector(doc, "p", nj);
  inst.demand = parse_vector(doc, "q", nk);
  inst.plant_depot_cost = parse_matrix(doc, "c", ni, nj);
  inst.depot_customer_cost = parse_matrix(doc, "d", nj, nk);

  validate(inst);
  return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << to_json(inst);
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("<file>", "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return instance_from_json(buf.str());
}

}  // namespace tscflp
