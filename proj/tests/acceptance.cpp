// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "crossdock/diagnosis.hpp"
#include "crossdock/exact.hpp"
#include "crossdock/fixtures.hpp"
#include "crossdock/io.hpp"
#include "crossdock/lp_export.hpp"
#include "crossdock/note_report.hpp"
#include "crossdock/subproblem.hpp"
#include "crossdock/vns.hpp"
#include "oracle.hpp"
#include "reference_data.hpp"

using namespace crossdock;

namespace {

constexpr auto kCD = Formulation::kCrossDock;
constexpr auto kRCD = Formulation::kRCrossDock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Instance OracleInstance(std::uint64_t seed, std::optional<double> ratio) {
  GeneratorParams p;
  p.seed = seed;
  p.n = 2 + static_cast<int>(seed % 3);
  p.m = 1 + static_cast<int>((seed / 3) % 2);
  p.flow_density = 1.0;
  p.capacity_ratio = ratio;
  return generate(p);
}

std::vector<int> RandomDocks(const Instance& inst, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-1, inst.m - 1);
  std::vector<int> dock(inst.n);
  for (auto& d : dock) d = dist(rng);
  return dock;
}

Outcome PrecedenceCriterion() {
  const auto inst = fixtures::miao_example();
  const auto xhat = compute_xhat(inst);
  std::vector<std::pair<int, int>> got;
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (i != j && xhat(i, j)) got.emplace_back(i + 1, j + 1);

  std::vector<std::pair<int, int>> from_tables;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if (i != j && refdata::kDeparture[i] <= refdata::kArrival[j])
        from_tables.emplace_back(i + 1, j + 1);

  std::string listed;
  for (const auto& [i, j] : got) listed += fmt::format("({},{})", i, j);
  return {got == refdata::kXhatOnes && from_tables == refdata::kXhatOnes, listed};
}

Outcome Infeasibility() {
  const auto inst = fixtures::miao_example();
  const auto s_prime = fixtures::s_prime_star();
  const bool rcd_ok = check_solution(inst, s_prime, kRCD).feasible() &&
                      oracle::feasible(inst, s_prime.dock, s_prime.transfers, oracle::Model::kRevised);
  const bool cd_bad = !check_solution(inst, s_prime, kCD).feasible();

  const auto conflict = find_conflict(inst, s_prime.dock, kCD);
  const ConstraintId pf{Family::kPairForcing, {0, 1, 0, 1}};
  const ConstraintId tf{Family::kTimeFeasibility, {0, 1, 0, 1}};
  const bool has_rows = conflict && std::count(conflict->constraints.begin(),
                                               conflict->constraints.end(), pf) == 1 &&
                        std::count(conflict->constraints.begin(),
                                   conflict->constraints.end(), tf) == 1;
  bool minimal = conflict && conflict->minimal &&
                 !rows_satisfiable(inst, s_prime.dock, kCD, conflict->constraints);
  if (conflict)
    for (std::size_t drop = 0; drop < conflict->constraints.size(); ++drop) {
      auto rest = conflict->constraints;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      minimal = minimal && rows_satisfiable(inst, s_prime.dock, kCD, rest);
    }

  const double margin = time_margin(inst, 0, 1, 0, 1);
  const double margin_tables =
      refdata::kDeparture[1] - refdata::kArrival[0] - refdata::kDockTable[0][1];
  const bool margin_ok = std::abs(margin + 0.01) <= 1e-9 && std::abs(margin_tables + 0.01) <= 1e-9;
  const bool narrative = conflict && conflict->narrative.find("y_11 + y_22 <= 1 + z_1212") !=
                                         std::string::npos;

  return {rcd_ok && cd_bad && has_rows && minimal && margin_ok && narrative,
          fmt::format("r-crossdock {}, crossdock {}, conflict size {}, margin {:.2f}",
                      rcd_ok ? "feasible" : "infeasible", cd_bad ? "infeasible" : "feasible",
                      conflict ? conflict->constraints.size() : 0, margin)};
}

Outcome SStar() {
  const auto inst = fixtures::miao_example();
  const auto s = fixtures::s_star();
  const auto report = check_solution(inst, s, kCD);
  const bool independent = oracle::feasible(inst, s.dock, s.transfers, oracle::Model::kOriginal);
  return {report.feasible() && independent && !inst.capacity,
          fmt::format("{} violated rows", report.violations.size())};
}

Outcome Juxtaposition() {
  NoteOptions options;
  options.budget.time_limit = Seconds(600.0);
  const auto note = reproduce_note(options);
  bool pass = note.modes.size() == 2 && note.modes[0].self_flows == SelfFlows::kExcluded &&
              note.modes[1].self_flows == SelfFlows::kLiteral;
  std::string detail;
  for (const auto& mode : note.modes) {
    const auto& cmp = mode.comparison;
    pass = pass && cmp.crossdock.proven_optimal && mode.rcrossdock_below_crossdock();
    std::set<double> reported;
    for (const auto& fig : mode.figures) reported.insert(fig.reported);
    pass = pass && reported.count(fixtures::kReportedCrossDockObjective) &&
           reported.count(fixtures::kReportedRCrossDockObjective) &&
           reported.count(fixtures::kReportedRelativeGapPercent);
    detail += fmt::format("{}[{}] s*={} cd={} rcd={}{} gap={:.2f}%", detail.empty() ? "" : "; ",
                          mode.self_flows == SelfFlows::kExcluded ? "default" : "strict-literal",
                          mode.s_star_objective.total, cmp.crossdock.objective.total,
                          cmp.rcrossdock.objective.total,
                          cmp.rcrossdock.proven_optimal ? "" : " (incumbent)",
                          cmp.relative_gap_percent);
  }
  detail += fmt::format("; reported {} / {} / {}%", fixtures::kReportedCrossDockObjective,
                        fixtures::kReportedRCrossDockObjective,
                        fixtures::kReportedRelativeGapPercent);
  return {pass, detail};
}

Outcome OracleEquivalence() {
  int agree = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    for (std::optional<double> ratio : {std::optional<double>{}, std::optional<double>{0.5}})
      for (auto form : {kCD, kRCD}) {
        const auto inst = OracleInstance(seed, ratio);
        ++total;
        if (branch_and_bound(inst, form).objective.total == brute_force(inst, form).objective.total)
          ++agree;
      }
  return {agree == total, fmt::format("{}/{} agree", agree, total)};
}

Outcome Properties() {
  std::mt19937_64 rng(2024);

  // (i) CROSS-DOCK transfers are a function of y.
  int determinism_fail = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto inst = generate({static_cast<std::uint64_t>(rep), 2 + rep % 4, 1 + rep % 3, 1.0,
                                rep % 3 ? std::nullopt : std::optional<double>{0.5}});
    const auto dock = repair_assignment(inst, kCD, RandomDocks(inst, rng));
    const auto a = induced_transfers_crossdock(inst, dock);
    const auto b = induced_transfers_crossdock(inst, dock);
    std::set<Transfer> expected;
    for (int i = 0; i < inst.n; ++i)
      for (int j = 0; j < inst.n; ++j)
        if (i != j && dock[i] >= 0 && dock[j] >= 0) expected.insert({i, j, dock[i], dock[j]});
    const std::set<Transfer> got(a.solution.transfers.begin(), a.solution.transfers.end());
    const auto again = induced_transfers_crossdock(inst, a.solution.dock);
    if (!(a.solution == b.solution) || got != expected || !(again.solution == a.solution))
      ++determinism_fail;
  }

  // (ii) R-CROSS-DOCK feasibility survives dropping transfers.
  int closure_fail = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto inst = generate({1000 + static_cast<std::uint64_t>(rep), 3 + rep % 3, 1 + rep % 3,
                                1.0, rep % 2 ? std::optional<double>{0.4} : std::nullopt});
    auto dock = RandomDocks(inst, rng);
    while (auto c = first_dock_conflict(inst, dock)) dock[c->indices[1]] = kUnassigned;
    const auto sol = optimal_transfers_rcrossdock(inst, dock).solution;
    if (!check_solution(inst, sol, kRCD).feasible()) ++closure_fail;
    std::bernoulli_distribution keep(0.5);
    Solution sub{sol.dock, {}};
    for (const auto& t : sol.transfers)
      if (keep(rng)) sub.transfers.push_back(t);
    if (!check_solution(inst, sub, kRCD).feasible() ||
        !oracle::feasible(inst, sub.dock, sub.transfers, oracle::Model::kRevised))
      ++closure_fail;
  }

  // (iii) Tighter capacity never increases the selected gain nor adds transfers.
  int capacity_fail = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const auto base = generate({static_cast<std::uint64_t>(rep), 4, 2, 1.0, std::nullopt});
    auto dock = RandomDocks(base, rng);
    while (auto c = first_dock_conflict(base, dock)) dock[c->indices[1]] = kUnassigned;
    const auto free_sel = optimal_transfers_rcrossdock(base, dock);
    const std::set<Transfer> all(free_sel.solution.transfers.begin(),
                                 free_sel.solution.transfers.end());
    double total = 0.0;
    for (int i = 0; i < base.n; ++i)
      for (int j = 0; j < base.n; ++j) total += base.flow(i, j);
    double previous = free_sel.gain;
    for (double ratio : {0.8, 0.5, 0.3, 0.1}) {
      auto inst = base;
      inst.capacity = ratio * total + 1.0;
      const auto sel = optimal_transfers_rcrossdock(inst, dock, SelectionPolicy::kExact);
      const std::set<Transfer> chosen(sel.solution.transfers.begin(), sel.solution.transfers.end());
      if (sel.gain > previous + 1e-9 ||
          !std::includes(all.begin(), all.end(), chosen.begin(), chosen.end()))
        ++capacity_fail;
      previous = sel.gain;
    }
  }

  // (iv) VNS incumbents are feasible and never worsen.
  int vns_fail = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate({500 + seed, 7, 3, 1.0,
                                seed % 2 ? std::optional<double>{0.5} : std::nullopt});
    VnsConfig cfg;
    cfg.rng_seed = seed;
    cfg.iter_max = 80;
    for (auto form : {kCD, kRCD}) {
      const auto r = vns_solve(inst, form, cfg);
      for (std::size_t p = 0; p < r.incumbent_history.size(); ++p) {
        if (!check_solution(inst, r.incumbent_history[p], form).feasible()) ++vns_fail;
        if (p > 0 && r.incumbent_trace[p] > r.incumbent_trace[p - 1]) ++vns_fail;
      }
    }
  }

  // (v) VNS reaches the enumerated optimum on most oracle instances.
  int matched = 0, runs = 0;
  for (auto form : {kCD, kRCD})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = OracleInstance(seed, seed % 2 ? std::optional<double>{0.5} : std::nullopt);
      VnsConfig cfg;
      cfg.rng_seed = seed;
      cfg.iter_max = 300;
      ++runs;
      if (vns_solve(inst, form, cfg).objective.total == brute_force(inst, form).objective.total)
        ++matched;
    }

  const bool pass = determinism_fail == 0 && closure_fail == 0 && capacity_fail == 0 &&
                    vns_fail == 0 && matched * 5 >= runs * 4;
  return {pass, fmt::format("determinism {} fail, closure {} fail, capacity {} fail, "
                            "vns monotone {} fail, vns optimum {}/{}",
                            determinism_fail, closure_fail, capacity_fail, vns_fail, matched, runs)};
}

// Objective from the emitted coefficients plus the header constant.
double LpObjective(const std::string& text, const Solution& sol) {
  std::set<std::string> on;
  for (std::size_t i = 0; i < sol.dock.size(); ++i)
    if (sol.dock[i] != kUnassigned) on.insert(fmt::format("y_{}_{}", i + 1, sol.dock[i] + 1));
  for (const auto& t : sol.transfers)
    on.insert(fmt::format("z_{}_{}_{}_{}", t.i + 1, t.j + 1, t.k + 1, t.l + 1));

  double total = 0.0;
  std::istringstream in(text);
  std::string line;
  bool objective = false;
  while (std::getline(in, line)) {
    if (line.rfind("\\ objective constant:", 0) == 0) total += std::stod(line.substr(21));
    if (line == "Minimize") objective = true;
    if (line == "Subject To") break;
    if (!objective) continue;
    std::istringstream ls(line);
    std::string sign, coef, var;
    if (ls >> sign >> coef >> var && on.count(var))
      total += (sign == "-" ? -1.0 : 1.0) * std::stod(coef);
  }
  return total;
}

Outcome LpExport() {
  const auto inst = fixtures::miao_example();
  bool pass = true;
  std::string detail;
  for (auto form : {kCD, kRCD}) {
    const auto a = emit_lp(inst, form);
    const auto b = emit_lp(inst, form);
    pass = pass && a.y_variable_count == 54 && a.z_variable_count == 2592 && a.text == b.text;
    if (detail.empty()) detail = fmt::format("{} y / {} z", a.y_variable_count, a.z_variable_count);
  }

  std::mt19937_64 rng(7);
  double worst = 0.0;
  int checked = 0;
  auto probe = [&](const Instance& instance, Formulation form, const Solution& sol) {
    if (!check_solution(instance, sol, form).feasible()) return;
    ++checked;
    const auto text = emit_lp(instance, form).text;
    worst = std::max(worst, std::abs(LpObjective(text, sol) - objective_value(instance, sol, form).total));
  };
  probe(inst, kCD, fixtures::s_star());
  probe(inst, kRCD, fixtures::s_prime_star());
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto small = generate({900 + seed, 3 + static_cast<int>(seed % 3), 2, 1.0,
                                 seed % 2 ? std::optional<double>{0.5} : std::nullopt});
    for (auto form : {kCD, kRCD}) {
      for (int rep = 0; rep < 5; ++rep)
        probe(small, form, evaluate_assignment(small, form, RandomDocks(small, rng)).solution);
      probe(small, form, branch_and_bound(small, form).best);
    }
  }
  pass = pass && checked > 100 && worst <= 1e-6;
  return {pass, fmt::format("{}, identical reruns, {} feasible solutions, max |delta| {:.3g}",
                            detail, checked, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"precedence", PrecedenceCriterion},
      {"infeasibility", Infeasibility},
      {"s* feasibility", SStar},
      {"objective juxtaposition", Juxtaposition},
      {"oracle equivalence", OracleEquivalence},
      {"property suites", Properties},
      {"lp export", LpExport},
  };
  const std::vector<double> limits = {1.0, 5.0, 1.0, 600.0, 60.0, 0.0, 0.0};

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[c].second();
    } catch (const std::exception& e) {
      out = {false, fmt::format("exception: {}", e.what())};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[c] > 0.0 && elapsed >= limits[c]) {
      out.pass = false;
      out.detail += fmt::format(" [over {}s limit]", limits[c]);
    }
    if (!out.pass) ++failed;
    fmt::print("{} criterion {}: {} ({:.3f}s) {}\n", out.pass ? "PASS" : "FAIL", c + 1,
               criteria[c].first, elapsed, out.detail);
  }
  return failed == 0 ? 0 : 1;
}
