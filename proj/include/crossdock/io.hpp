#pragma once

// JSON instance and solution files.
//
// Instance:  {"name"?, "seed"?, "n", "m", "arrival", "departure",
//             "transfer_time", "transfer_cost", "flow", "penalty",
//             "capacity": number | "unbounded"}
// Solution:  {"name"?, "dock": [k or 0 for unassigned, ...],
//             "transfers": [[i, j, k, l], ...]}
// All indices in files are 1-based. Unknown keys are rejected.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "crossdock/model.hpp"

namespace crossdock {

class SchemaError : public Error {
 public:
  using Error::Error;
};

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

Solution parse_solution(std::string_view text);
std::string serialize_solution(const Solution& sol, std::string_view name = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

inline Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}
inline Solution load_solution(const std::filesystem::path& path) {
  return parse_solution(read_file(path));
}

/// Seeded instance generator. Times carry two decimals within one day-like
/// horizon, transfer times are small integers, flows are 10 x [10..20]
/// pallets with probability flow_density and zeroed whenever the receiving
/// truck leaves before the sender arrives. capacity_ratio scales the total
/// off-diagonal flow into C; nullopt, or an instance without flow, stays
/// unbounded.
struct GeneratorParams {
  std::uint64_t seed = 0;
  int n = 4;
  int m = 2;
  double flow_density = 1.0;
  std::optional<double> capacity_ratio;
};

Instance generate(const GeneratorParams& params);

}  // namespace crossdock
