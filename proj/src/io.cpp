#include "crossdock/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "crossdock/random.hpp"

namespace crossdock {

namespace {

using nlohmann::json;

json ParseJson(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(fmt::format("{}: {}", what, e.what()));
  }
}

void RejectUnknownKeys(const json& doc, const std::set<std::string>& allowed,
                       std::string_view what) {
  if (!doc.is_object()) throw SchemaError(fmt::format("{}: expected a JSON object", what));
  for (const auto& [key, value] : doc.items())
    if (!allowed.contains(key)) throw SchemaError(fmt::format("{}: unknown key '{}'", what, key));
}

const json& Require(const json& doc, const char* key, std::string_view what) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(fmt::format("{}: missing key '{}'", what, key));
  return *it;
}

double Number(const json& v, std::string_view context) {
  if (!v.is_number()) throw SchemaError(fmt::format("{}: expected a number", context));
  return v.get<double>();
}

int Integer(const json& v, std::string_view context) {
  if (!v.is_number_integer())
    throw SchemaError(fmt::format("{}: expected an integer", context));
  return v.get<int>();
}

std::vector<double> Vector(const json& v, std::string_view context) {
  if (!v.is_array()) throw SchemaError(fmt::format("{}: expected an array", context));
  std::vector<double> out;
  for (std::size_t p = 0; p < v.size(); ++p)
    out.push_back(Number(v[p], fmt::format("{}[{}]", context, p + 1)));
  return out;
}

Matrix MatrixOf(const json& v, std::string_view context) {
  if (!v.is_array()) throw SchemaError(fmt::format("{}: expected an array of rows", context));
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    rows.push_back(Vector(v[r], fmt::format("{}[{}]", context, r + 1)));
    if (rows.back().size() != rows.front().size())
      throw SchemaError(fmt::format("{}: row {} has {} entries, row 1 has {}", context, r + 1,
                                    rows.back().size(), rows.front().size()));
  }
  return Matrix::FromRows(rows);
}

json MatrixJson(const Matrix& mat) {
  json rows = json::array();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

double Round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

Instance parse_instance(std::string_view text) {
  constexpr std::string_view kWhat = "instance";
  const json doc = ParseJson(text, kWhat);
  RejectUnknownKeys(doc,
                    {"name", "seed", "n", "m", "arrival", "departure", "transfer_time",
                     "transfer_cost", "flow", "penalty", "capacity"},
                    kWhat);
  Instance inst;
  inst.n = Integer(Require(doc, "n", kWhat), "instance.n");
  inst.m = Integer(Require(doc, "m", kWhat), "instance.m");
  inst.arrival = Vector(Require(doc, "arrival", kWhat), "instance.arrival");
  inst.departure = Vector(Require(doc, "departure", kWhat), "instance.departure");
  inst.transfer_time = MatrixOf(Require(doc, "transfer_time", kWhat), "instance.transfer_time");
  inst.transfer_cost = MatrixOf(Require(doc, "transfer_cost", kWhat), "instance.transfer_cost");
  inst.flow = MatrixOf(Require(doc, "flow", kWhat), "instance.flow");
  inst.penalty = MatrixOf(Require(doc, "penalty", kWhat), "instance.penalty");
  const json& cap = Require(doc, "capacity", kWhat);
  if (cap.is_string()) {
    if (cap.get<std::string>() != "unbounded")
      throw SchemaError("instance.capacity: expected a number or \"unbounded\"");
  } else {
    inst.capacity = Number(cap, "instance.capacity");
  }
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw SchemaError("instance.name: expected a string");
    inst.name = it->get<std::string>();
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw SchemaError("instance.seed: expected an unsigned integer");
    inst.seed = it->get<std::uint64_t>();
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  if (inst.seed) doc["seed"] = *inst.seed;
  doc["n"] = inst.n;
  doc["m"] = inst.m;
  doc["arrival"] = inst.arrival;
  doc["departure"] = inst.departure;
  doc["transfer_time"] = MatrixJson(inst.transfer_time);
  doc["transfer_cost"] = MatrixJson(inst.transfer_cost);
  doc["flow"] = MatrixJson(inst.flow);
  doc["penalty"] = MatrixJson(inst.penalty);
  if (inst.capacity) {
    doc["capacity"] = *inst.capacity;
  } else {
    doc["capacity"] = "unbounded";
  }
  return doc.dump(2) + "\n";
}

Solution parse_solution(std::string_view text) {
  constexpr std::string_view kWhat = "solution";
  const json doc = ParseJson(text, kWhat);
  RejectUnknownKeys(doc, {"name", "dock", "transfers"}, kWhat);
  Solution sol;
  const json& dock = Require(doc, "dock", kWhat);
  if (!dock.is_array()) throw SchemaError("solution.dock: expected an array");
  for (std::size_t p = 0; p < dock.size(); ++p) {
    const int k = Integer(dock[p], fmt::format("solution.dock[{}]", p + 1));
    if (k < 0) throw SchemaError(fmt::format("solution.dock[{}]: negative dock", p + 1));
    sol.dock.push_back(k == 0 ? kUnassigned : k - 1);
  }
  const json& transfers = Require(doc, "transfers", kWhat);
  if (!transfers.is_array()) throw SchemaError("solution.transfers: expected an array");
  for (std::size_t p = 0; p < transfers.size(); ++p) {
    const auto context = fmt::format("solution.transfers[{}]", p + 1);
    const json& t = transfers[p];
    if (!t.is_array() || t.size() != 4)
      throw SchemaError(fmt::format("{}: expected [i, j, k, l]", context));
    int idx[4];
    for (int q = 0; q < 4; ++q) {
      idx[q] = Integer(t[q], context);
      if (idx[q] < 1) throw SchemaError(fmt::format("{}: indices are 1-based", context));
    }
    sol.transfers.push_back({idx[0] - 1, idx[1] - 1, idx[2] - 1, idx[3] - 1});
  }
  return sol;
}

std::string serialize_solution(const Solution& sol, std::string_view name) {
  json doc;
  if (!name.empty()) doc["name"] = std::string(name);
  json dock = json::array();
  for (int k : sol.dock) dock.push_back(k == kUnassigned ? 0 : k + 1);
  doc["dock"] = std::move(dock);
  json transfers = json::array();
  for (const auto& t : sol.sorted_transfers())
    transfers.push_back({t.i + 1, t.j + 1, t.k + 1, t.l + 1});
  doc["transfers"] = std::move(transfers);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << text;
}

Instance generate(const GeneratorParams& params) {
  if (params.n < 1 || params.m < 1) throw Error("generate: n and m must be positive");
  Rng rng(params.seed);
  Instance inst;
  inst.n = params.n;
  inst.m = params.m;
  inst.name = fmt::format("gen_s{}_n{}_m{}", params.seed, params.n, params.m);
  inst.seed = params.seed;

  for (int i = 0; i < inst.n; ++i) {
    const double a = Round2(6.0 * Uniform01(rng));
    const double d = Round2(a + 1.0 + 3.0 * Uniform01(rng));
    inst.arrival.push_back(a);
    inst.departure.push_back(d);
  }

  inst.transfer_time = Matrix(inst.m, inst.m);
  inst.transfer_cost = Matrix(inst.m, inst.m);
  for (int k = 0; k < inst.m; ++k) {
    for (int l = k + 1; l < inst.m; ++l) {
      const double t = UniformInt(rng, 1, 2);
      const double c = 10.0 * UniformInt(rng, 1, 30);
      inst.transfer_time(k, l) = inst.transfer_time(l, k) = t;
      inst.transfer_cost(k, l) = inst.transfer_cost(l, k) = c;
    }
  }

  inst.flow = Matrix(inst.n, inst.n);
  inst.penalty = Matrix(inst.n, inst.n);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      const bool present = Uniform01(rng) < params.flow_density;
      const double f = 10.0 * UniformInt(rng, 10, 20);
      inst.penalty(i, j) = UniformInt(rng, 1, 20);
      const bool reachable = i == j || inst.departure[j] >= inst.arrival[i];
      inst.flow(i, j) = present && reachable ? f : 0.0;
    }
  }

  if (params.capacity_ratio) {
    double off_diagonal = 0.0;
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j)
        if (i != j) off_diagonal += inst.flow(i, j);
    if (off_diagonal > 0.0) inst.capacity = *params.capacity_ratio * off_diagonal;
  }
  return inst;
}

}  // namespace crossdock
