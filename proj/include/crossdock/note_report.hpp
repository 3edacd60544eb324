#pragma once

// End-to-end run over the bundled 9-truck example: validation, precedence,
// checks of both listed solutions, conflict search, exact solves in both
// self-flow modes and a side-by-side with the published figures.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossdock/diagnosis.hpp"
#include "crossdock/exact.hpp"
#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

struct NoteOptions {
  std::optional<double> capacity;  // nullopt: unbounded
  Budget budget;
};

struct FigureComparison {
  std::string label;
  double reported = 0.0;
  double computed = 0.0;
  double delta() const { return computed - reported; }
};

struct ModeReport {
  SelfFlows self_flows = SelfFlows::kExcluded;
  ObjectiveBreakdown s_star_objective;
  ModelComparison comparison;
  std::vector<FigureComparison> figures;

  /// Strict inequality with kEps margin between the two computed optima.
  bool rcrossdock_below_crossdock() const;
};

struct NoteReport {
  Validation validation;
  Validation as_printed_validation;
  std::vector<std::pair<int, int>> xhat_ones;  // 0-based
  ViolationReport s_star_crossdock;
  ViolationReport s_star_rcrossdock;
  ViolationReport s_prime_crossdock;
  ViolationReport s_prime_rcrossdock;
  std::optional<ConflictSet> s_prime_conflict;
  double margin_1212 = 0.0;  // d_2 - a_1 - t_12
  std::vector<ModeReport> modes;  // default, then strict-literal
  Seconds solve_time{0};
  std::string text;  // line-oriented, timing excluded
};

NoteReport reproduce_note(const NoteOptions& options = {});

}  // namespace crossdock
