#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossdock/exact.hpp"
#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

enum class LocalSearch { kFirstImprovement, kBestImprovement };

struct VnsConfig {
  int k_max = 3;
  std::uint64_t iter_max = 200;
  Seconds time_budget{10.0};
  std::uint64_t rng_seed = 0;
  LocalSearch local_search = LocalSearch::kBestImprovement;
};

/// Identifier of the generator behind vns_solve, recorded in its result.
inline constexpr const char* kVnsRngAlgorithm = "std::mt19937_64";

/// Greedy starting assignment: trucks by descending total penalty exposure,
/// each to the feasible dock that lowers the objective most, else undocked.
std::vector<int> greedy_assignment(const Instance& inst, Formulation form);

/// Undocks the later-arriving truck of each conflict until the assignment is
/// feasible for `form`.
std::vector<int> repair_assignment(const Instance& inst, Formulation form,
                                   std::vector<int> dock);

/// Basic variable neighborhood search. Shaking in N_k reassigns k random
/// trucks (possibly to "unassigned"), local search descends through single
/// reassignments and pairwise dock swaps, and the walk moves on improvement
/// or widens k otherwise. One iteration is one shake. Transfers are always
/// recomputed by the subproblem. incumbent_trace holds the best objective
/// after every iteration (first entry: the starting solution). `start`
/// replaces the greedy starting assignment when given.
OptimizeResult vns_solve(const Instance& inst, Formulation form, const VnsConfig& cfg,
                         const std::optional<std::vector<int>>& start = std::nullopt);

}  // namespace crossdock
