#pragma once

// Exact solvers over dock assignments: a depth-first branch-and-bound and an
// exhaustive enumeration used as its oracle.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

using Seconds = std::chrono::duration<double>;

struct Budget {
  std::uint64_t node_limit = 0;  // 0: unlimited
  std::optional<Seconds> time_limit;
};

enum class SolveStatus {
  kOptimal,          // search exhausted with exact leaf evaluation
  kBudgetExhausted,  // incumbent returned, optimality not proven
  kHeuristic,        // completed, but some transfer selection was greedy
};

std::string_view to_string(SolveStatus status);

struct OptimizeResult {
  Solution best;
  ObjectiveBreakdown objective;
  bool proven_optimal = false;
  SolveStatus status = SolveStatus::kBudgetExhausted;
  std::uint64_t nodes_explored = 0;
  Seconds wall_time{0};
  double bound_at_root = 0.0;

  /// Objective after every incumbent change, first entry the starting point.
  std::vector<double> incumbent_trace;
  /// Every incumbent, aligned with incumbent_trace.
  std::vector<Solution> incumbent_history;

  std::string rng_algorithm;  // set by randomised solvers
};

/// Depth-first search over dock[i] in {1..m, unassigned}, trucks in ascending
/// arrival order, docks ascending with "unassigned" last. Nodes are pruned
/// when the admissible bound (committed transfers + total penalty - optimistic
/// savings of undecided pairs, capacity ignored) cannot beat the incumbent by
/// more than kEps. Deterministic.
OptimizeResult branch_and_bound(const Instance& inst, Formulation form,
                                const Budget& budget = {});

inline constexpr double kBruteForceLimit = 1e6;

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Every dock assignment, every admissible transfer subset, each candidate
/// judged by check_solution and priced by objective_value. Throws
/// InstanceTooLarge when (m+1)^n exceeds kBruteForceLimit.
OptimizeResult brute_force(const Instance& inst, Formulation form);

/// Lower bound used by branch_and_bound for a partial assignment. `decided`
/// marks the trucks fixed in `dock`; the others are free. Exposed for the
/// admissibility tests.
double node_lower_bound(const Instance& inst, Formulation form,
                        const std::vector<int>& dock, const std::vector<bool>& decided);

struct ModelComparison {
  OptimizeResult crossdock;
  OptimizeResult rcrossdock;
  double absolute_gap = 0.0;          // obj_CD - obj_RCD
  double relative_gap_percent = 0.0;  // 100 * (obj_CD - obj_RCD) / obj_CD
  /// The R-CROSS-DOCK optimum violates CROSS-DOCK.
  bool rcd_infeasible_in_cd = false;
  ViolationReport rcd_under_cd;
};

ModelComparison compare_models(const Instance& inst, const Budget& budget = {});

}  // namespace crossdock
