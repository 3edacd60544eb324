// crossdock: command-line front end.
//
// Exit codes: 0 success, 1 infeasible solution (check), 2 invalid input or
// usage, 3 search budget exhausted without any incumbent.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "crossdock/diagnosis.hpp"
#include "crossdock/exact.hpp"
#include "crossdock/formulations.hpp"
#include "crossdock/io.hpp"
#include "crossdock/lp_export.hpp"
#include "crossdock/model.hpp"
#include "crossdock/note_report.hpp"
#include "crossdock/vns.hpp"

namespace cd = crossdock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNoIncumbent = 3;

struct InstanceArgs {
  std::string path;
  std::optional<double> capacity;
  bool strict_literal = false;
};

struct BudgetArgs {
  std::optional<double> time_limit;
  std::uint64_t node_limit = 0;

  cd::Budget ToBudget() const {
    cd::Budget b;
    b.node_limit = node_limit;
    if (time_limit) b.time_limit = cd::Seconds(*time_limit);
    return b;
  }
};

void AddInstanceArgs(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("instance", args.path, "Instance JSON file")->required();
  cmd->add_option("--capacity", args.capacity, "Override the buffer capacity C");
  cmd->add_flag("--strict-literal", args.strict_literal,
                "Keep self flows f_ii in the objective and admit diagonal transfers");
}

void AddModelOption(CLI::App* cmd, std::string& model) {
  cmd->add_option("--model", model, "crossdock or r-crossdock")
      ->required()
      ->check(CLI::IsMember({"crossdock", "r-crossdock"}));
}

void AddBudgetArgs(CLI::App* cmd, BudgetArgs& args) {
  cmd->add_option("--time-limit", args.time_limit, "Wall-clock limit in seconds");
  cmd->add_option("--node-limit", args.node_limit, "Search node limit (0: none)");
}

cd::Instance LoadInstance(const InstanceArgs& args) {
  cd::Instance inst = cd::load_instance(args.path);
  if (args.capacity) inst.capacity = *args.capacity;
  if (args.strict_literal) inst.self_flows = cd::SelfFlows::kLiteral;
  cd::require_valid(inst);
  return inst;
}

cd::Formulation ModelOf(const std::string& text) { return *cd::parse_formulation(text); }

std::string DockLine(const cd::Solution& sol) {
  std::string out = "dock:";
  for (int k : sol.dock) out += fmt::format(" {}", k == cd::kUnassigned ? 0 : k + 1);
  return out;
}

void PrintSolution(const cd::Solution& sol, const cd::ObjectiveBreakdown& obj) {
  fmt::print("objective: {}\n", obj.total);
  fmt::print("transfer_cost: {}\n", obj.transfer_cost_total);
  fmt::print("penalty: {}\n", obj.penalty_total);
  fmt::print("fulfilled_pairs: {}\n", obj.fulfilled_pairs);
  fmt::print("{}\n", DockLine(sol));
  for (const auto& t : sol.sorted_transfers())
    fmt::print("transfer: ({},{},{},{})\n", t.i + 1, t.j + 1, t.k + 1, t.l + 1);
}

void PrintViolations(const cd::ViolationReport& report) {
  for (const auto& v : report.violations)
    fmt::print("violated {}: lhs {} rhs {}: {}\n", v.id.ToString(), v.lhs, v.rhs,
               v.explanation);
}

void PrintConflict(const std::optional<cd::ConflictSet>& conflict) {
  if (!conflict) {
    fmt::print("conflict: none, the dock assignment admits feasible transfers\n");
    return;
  }
  std::string line = "conflict:";
  for (const auto& id : conflict->constraints) line += " " + id.ToString();
  fmt::print("{}\n", line);
  fmt::print("minimal: {}\n", conflict->minimal ? "yes" : "no");
  std::string reason = conflict->narrative;
  for (auto pos = reason.find('\n'); pos != std::string::npos; pos = reason.find('\n', pos + 3))
    reason.replace(pos, 1, "\n  ");
  fmt::print("reason: {}\n", reason);
}

void PrintTime(cd::Seconds elapsed) { fmt::print("time: {:.3f}s\n", elapsed.count()); }

int RunValidate(const InstanceArgs& args) {
  cd::Instance inst = cd::load_instance(args.path);
  if (args.capacity) inst.capacity = *args.capacity;
  if (args.strict_literal) inst.self_flows = cd::SelfFlows::kLiteral;
  const auto v = cd::validate_instance(inst);
  if (!v.ok()) {
    fmt::print("INVALID\n");
    for (const auto& e : v.errors) fmt::print("error: {}\n", e.ToString());
    return kExitInvalid;
  }
  fmt::print("OK\n");
  fmt::print("trucks: {}\ndocks: {}\n", inst.n, inst.m);
  fmt::print("over-constrained: {}\n", v.over_constrained ? "yes" : "no");
  return kExitOk;
}

struct SolveArgs {
  InstanceArgs instance;
  std::string model;
  std::string method = "bnb";
  std::uint64_t seed = 0;
  BudgetArgs budget;
  std::uint64_t iter_max = 200;
  int k_max = 3;
  std::string out;
};

int RunSolve(const SolveArgs& args) {
  const cd::Instance inst = LoadInstance(args.instance);
  const cd::Formulation form = ModelOf(args.model);
  cd::OptimizeResult result;
  if (args.method == "bnb") {
    result = cd::branch_and_bound(inst, form, args.budget.ToBudget());
  } else if (args.method == "brute") {
    result = cd::brute_force(inst, form);
  } else {
    cd::VnsConfig cfg;
    cfg.rng_seed = args.seed;
    cfg.iter_max = args.iter_max;
    cfg.k_max = args.k_max;
    if (args.budget.time_limit) cfg.time_budget = cd::Seconds(*args.budget.time_limit);
    result = cd::vns_solve(inst, form, cfg);
  }
  if (result.incumbent_trace.empty()) {
    fmt::print("status: {}\nno incumbent\n", to_string(result.status));
    return kExitNoIncumbent;
  }
  fmt::print("model: {}\nmethod: {}\n", args.model, args.method);
  fmt::print("status: {}\n", to_string(result.status));
  PrintSolution(result.best, result.objective);
  fmt::print("nodes: {}\n", result.nodes_explored);
  if (!result.rng_algorithm.empty()) fmt::print("rng: {} seed {}\n", result.rng_algorithm, args.seed);
  if (!args.out.empty()) cd::write_file(args.out, cd::serialize_solution(result.best, inst.name));
  PrintTime(result.wall_time);
  return kExitOk;
}

struct CheckArgs {
  InstanceArgs instance;
  std::string solution;
  std::string model;
};

int RunCheck(const CheckArgs& args) {
  const cd::Instance inst = LoadInstance(args.instance);
  const cd::Solution sol = cd::load_solution(args.solution);
  cd::check_structure(inst, sol);
  const cd::Formulation form = ModelOf(args.model);
  const auto report = cd::check_solution(inst, sol, form);
  if (report.feasible()) {
    fmt::print("feasible\n");
    PrintSolution(sol, cd::objective_value(inst, sol, form));
    return kExitOk;
  }
  fmt::print("infeasible\n");
  PrintViolations(report);
  PrintConflict(cd::find_conflict(inst, sol.dock, form));
  return kExitInfeasible;
}

int RunDiagnose(const CheckArgs& args) {
  const cd::Instance inst = LoadInstance(args.instance);
  const cd::Solution sol = cd::load_solution(args.solution);
  cd::check_structure(inst, sol);
  const auto start = std::chrono::steady_clock::now();
  PrintConflict(cd::find_conflict(inst, sol.dock, ModelOf(args.model)));
  PrintTime(std::chrono::steady_clock::now() - start);
  return kExitOk;
}

int RunCompare(const InstanceArgs& instance, const BudgetArgs& budget) {
  const cd::Instance inst = LoadInstance(instance);
  const auto cmp = cd::compare_models(inst, budget.ToBudget());
  fmt::print("crossdock: {} (status {})\n", cmp.crossdock.objective.total,
             to_string(cmp.crossdock.status));
  fmt::print("r-crossdock: {} (status {})\n", cmp.rcrossdock.objective.total,
             to_string(cmp.rcrossdock.status));
  fmt::print("absolute_gap: {}\n", cmp.absolute_gap);
  fmt::print("relative_gap_percent: {:.6f}\n", cmp.relative_gap_percent);
  if (cmp.rcd_infeasible_in_cd) {
    fmt::print("r-crossdock optimum infeasible in crossdock: yes ({} violated rows)\n",
               cmp.rcd_under_cd.violations.size());
    PrintConflict(cd::find_conflict(inst, cmp.rcrossdock.best.dock, cd::Formulation::kCrossDock));
  } else {
    fmt::print("r-crossdock optimum infeasible in crossdock: no\n");
  }
  PrintTime(cmp.crossdock.wall_time + cmp.rcrossdock.wall_time);
  return kExitOk;
}

int RunExportLp(const InstanceArgs& instance, const std::string& model,
                const std::string& out_dir) {
  const cd::Instance inst = LoadInstance(instance);
  const cd::Formulation form = ModelOf(model);
  const auto doc = cd::emit_lp(inst, form);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / cd::lp_file_name(inst, form);
  cd::write_file(path, doc.text);
  fmt::print("wrote: {}\n", path.string());
  fmt::print("variables: {} (y {}, z {})\n", doc.variable_count, doc.y_variable_count,
             doc.z_variable_count);
  fmt::print("constraints: {}\nfixed: {}\n", doc.constraint_count, doc.fixed_count);
  fmt::print("objective_constant: {}\n", doc.objective_constant);
  return kExitOk;
}

int RunGen(const cd::GeneratorParams& params, const std::string& out) {
  const std::string text = cd::serialize_instance(cd::generate(params));
  if (out.empty() || out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    cd::write_file(out, text);
    fmt::print("wrote: {}\n", out);
  }
  return kExitOk;
}

int RunReproduceNote(const std::optional<double>& capacity, const BudgetArgs& budget) {
  cd::NoteOptions options;
  options.capacity = capacity;
  options.budget = budget.ToBudget();
  const auto report = cd::reproduce_note(options);
  std::fwrite(report.text.data(), 1, report.text.size(), stdout);
  PrintTime(report.solve_time);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truck-to-dock assignment models, solvers and diagnostics"};
  app.require_subcommand(1);

  InstanceArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Validate an instance file");
  AddInstanceArgs(validate, validate_args);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  AddInstanceArgs(solve, solve_args.instance);
  AddModelOption(solve, solve_args.model);
  solve->add_option("--method", solve_args.method, "bnb, brute or vns")
      ->check(CLI::IsMember({"bnb", "brute", "vns"}));
  solve->add_option("--seed", solve_args.seed, "VNS random seed");
  solve->add_option("--iter-max", solve_args.iter_max, "VNS iteration limit");
  solve->add_option("--k-max", solve_args.k_max, "VNS largest neighborhood");
  solve->add_option("--out", solve_args.out, "Write the solution JSON here");
  AddBudgetArgs(solve, solve_args.budget);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check a solution against a model");
  AddInstanceArgs(check, check_args.instance);
  check->add_option("solution", check_args.solution, "Solution JSON file")->required();
  AddModelOption(check, check_args.model);

  CheckArgs diagnose_args;
  auto* diagnose =
      app.add_subcommand("diagnose", "Find a minimal conflict for a solution's dock assignment");
  AddInstanceArgs(diagnose, diagnose_args.instance);
  diagnose->add_option("solution", diagnose_args.solution, "Solution JSON file")->required();
  AddModelOption(diagnose, diagnose_args.model);

  InstanceArgs compare_args;
  BudgetArgs compare_budget;
  auto* compare = app.add_subcommand("compare", "Solve both models and report the gap");
  AddInstanceArgs(compare, compare_args);
  AddBudgetArgs(compare, compare_budget);

  InstanceArgs lp_args;
  std::string lp_model;
  std::string lp_out = ".";
  auto* export_lp = app.add_subcommand("export-lp", "Write the model as an LP file");
  AddInstanceArgs(export_lp, lp_args);
  AddModelOption(export_lp, lp_model);
  export_lp->add_option("--out", lp_out, "Output directory");

  cd::GeneratorParams gen_params;
  double capacity_ratio = 0.0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--seed", gen_params.seed, "Random seed");
  gen->add_option("--n", gen_params.n, "Trucks")->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_params.m, "Docks")->check(CLI::PositiveNumber);
  gen->add_option("--flow-density", gen_params.flow_density, "Probability of a flow")
      ->check(CLI::Range(0.0, 1.0));
  auto* ratio_opt = gen->add_option("--capacity-ratio", capacity_ratio,
                                    "C as a fraction of the total flow (default unbounded)")
                        ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  std::optional<double> note_capacity;
  BudgetArgs note_budget;
  auto* note = app.add_subcommand("reproduce-note",
                                  "Run the full pipeline on the bundled 9-truck example");
  note->add_option("--capacity", note_capacity, "Buffer capacity (default unbounded)");
  AddBudgetArgs(note, note_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*validate) return RunValidate(validate_args);
    if (*solve) return RunSolve(solve_args);
    if (*check) return RunCheck(check_args);
    if (*diagnose) return RunDiagnose(diagnose_args);
    if (*compare) return RunCompare(compare_args, compare_budget);
    if (*export_lp) return RunExportLp(lp_args, lp_model, lp_out);
    if (*gen) {
      if (ratio_opt->count() > 0) gen_params.capacity_ratio = capacity_ratio;
      return RunGen(gen_params, gen_out);
    }
    if (*note) return RunReproduceNote(note_capacity, note_budget);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
