#include "crossdock/note_report.hpp"

#include <chrono>
#include <sstream>

#include <fmt/format.h>

#include "crossdock/fixtures.hpp"

namespace crossdock {

namespace {

std::string_view ModeName(SelfFlows mode) {
  return mode == SelfFlows::kLiteral ? "strict-literal" : "default";
}

std::string CapacityText(const Instance& inst) {
  return inst.capacity ? fmt::format("{}", *inst.capacity) : "unbounded";
}

void AppendCheck(std::string& out, std::string_view solution, Formulation form,
                 const ViolationReport& report) {
  if (report.feasible()) {
    out += fmt::format("check {} {}: feasible\n", solution, to_string(form));
    return;
  }
  out += fmt::format("check {} {}: infeasible ({} violated)\n", solution, to_string(form),
                     report.violations.size());
  for (const auto& v : report.violations)
    out += fmt::format("  {}: {}\n", v.id.ToString(), v.explanation);
}

std::string SolveLine(std::string_view label, const OptimizeResult& r) {
  return fmt::format("optimum {}: {} (status {}, nodes {})\n", label, r.objective.total,
                     to_string(r.status), r.nodes_explored);
}

ModeReport RunMode(const Instance& base, SelfFlows mode, const Budget& budget) {
  Instance inst = base;
  inst.self_flows = mode;
  ModeReport report;
  report.self_flows = mode;
  report.s_star_objective =
      objective_value(inst, fixtures::s_star(), Formulation::kCrossDock);
  report.comparison = compare_models(inst, budget);
  const auto& cmp = report.comparison;
  report.figures = {
      {"objective s* crossdock", fixtures::kReportedCrossDockObjective,
       report.s_star_objective.total},
      {"optimum crossdock", fixtures::kReportedCrossDockObjective,
       cmp.crossdock.objective.total},
      {"optimum r-crossdock", fixtures::kReportedRCrossDockObjective,
       cmp.rcrossdock.objective.total},
      {"relative gap %", fixtures::kReportedRelativeGapPercent, cmp.relative_gap_percent},
  };
  return report;
}

}  // namespace

bool ModeReport::rcrossdock_below_crossdock() const {
  return comparison.rcrossdock.objective.total <
         comparison.crossdock.objective.total - kEps;
}

NoteReport reproduce_note(const NoteOptions& options) {
  NoteReport report;
  const Instance printed = fixtures::miao_example_as_printed();
  Instance inst = fixtures::miao_example();
  inst.capacity = options.capacity;

  report.as_printed_validation = validate_instance(printed);
  report.validation = validate_instance(inst);
  require_valid(inst);

  const Precedence xhat(inst);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (xhat(i, j)) report.xhat_ones.emplace_back(i, j);

  const Solution s_star = fixtures::s_star();
  const Solution s_prime = fixtures::s_prime_star();
  report.s_star_crossdock = check_solution(inst, s_star, Formulation::kCrossDock);
  report.s_star_rcrossdock = check_solution(inst, s_star, Formulation::kRCrossDock);
  report.s_prime_crossdock = check_solution(inst, s_prime, Formulation::kCrossDock);
  report.s_prime_rcrossdock = check_solution(inst, s_prime, Formulation::kRCrossDock);
  report.s_prime_conflict = find_conflict(inst, s_prime.dock, Formulation::kCrossDock);
  report.margin_1212 = time_margin(inst, 0, 1, 0, 1);

  const auto start = std::chrono::steady_clock::now();
  for (SelfFlows mode : {SelfFlows::kExcluded, SelfFlows::kLiteral})
    report.modes.push_back(RunMode(inst, mode, options.budget));
  report.solve_time = std::chrono::steady_clock::now() - start;

  std::string& out = report.text;
  out += fmt::format("instance: {} (n={}, m={}, capacity {})\n", inst.name, inst.n, inst.m,
                     CapacityText(inst));
  out += fmt::format("printed data: {} validation error(s)\n",
                     report.as_printed_validation.errors.size());
  for (const auto& e : report.as_printed_validation.errors)
    out += fmt::format("  {} -> flow set to 0\n", e.ToString());
  out += fmt::format("validation: {}{}\n", report.validation.ok() ? "ok" : "failed",
                     report.validation.over_constrained
                         ? fmt::format(", over-constrained ({} trucks > {} docks)", inst.n,
                                       inst.m)
                         : "");
  out += "xhat = 1:";
  for (const auto& [i, j] : report.xhat_ones) out += fmt::format(" ({},{})", i + 1, j + 1);
  out += "\n";

  AppendCheck(out, "s*", Formulation::kCrossDock, report.s_star_crossdock);
  AppendCheck(out, "s*", Formulation::kRCrossDock, report.s_star_rcrossdock);
  AppendCheck(out, "s'*", Formulation::kCrossDock, report.s_prime_crossdock);
  AppendCheck(out, "s'*", Formulation::kRCrossDock, report.s_prime_rcrossdock);

  out += fmt::format("margin d_2 - a_1 - t_12: {:.2f}\n", report.margin_1212);
  if (report.s_prime_conflict) {
    out += "conflict for y(s'*) under crossdock:";
    for (const auto& id : report.s_prime_conflict->constraints) out += " " + id.ToString();
    out += report.s_prime_conflict->minimal ? " (minimal)\n" : " (not minimal)\n";
    std::istringstream narrative(report.s_prime_conflict->narrative);
    for (std::string line; std::getline(narrative, line);) out += fmt::format("  {}\n", line);
    out += "  a report naming only the pair-forcing row omits the time row that fixes "
           "z_1212 = 0\n";
  } else {
    out += "conflict for y(s'*) under crossdock: none\n";
  }

  for (const auto& mode : report.modes) {
    out += fmt::format("[mode {}]\n", ModeName(mode.self_flows));
    out += SolveLine("crossdock", mode.comparison.crossdock);
    out += SolveLine("r-crossdock", mode.comparison.rcrossdock);
    for (const auto& fig : mode.figures)
      out += fmt::format("{}: reported {:.8g} computed {:.8g} delta {:.8g}\n", fig.label,
                         fig.reported, fig.computed, fig.delta());
    out += fmt::format("r-crossdock below crossdock: {}\n",
                       mode.rcrossdock_below_crossdock() ? "yes" : "no");
  }
  return report;
}

}  // namespace crossdock
