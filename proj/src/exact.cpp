#include "crossdock/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "crossdock/subproblem.hpp"

namespace crossdock {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Per-pair gains and the optimistic savings used by the bound.
class PairTables {
 public:
  PairTables(const Instance& inst, Formulation form)
      : inst_(inst),
        form_(form),
        n_(inst.n),
        m_(inst.m),
        gain_(static_cast<std::size_t>(n_) * n_ * m_ * m_, 0.0),
        feasible_(gain_.size(), 0),
        best_any_(static_cast<std::size_t>(n_) * n_, 0.0),
        best_from_(static_cast<std::size_t>(n_) * n_ * m_, 0.0),
        best_to_(static_cast<std::size_t>(n_) * n_ * m_, 0.0),
        diag_fixed_(n_, 0.0),
        diag_at_(static_cast<std::size_t>(n_) * m_, 0.0),
        diag_any_(n_, 0.0) {
    const Precedence xhat(inst);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        for (int k = 0; k < m_; ++k) {
          for (int l = 0; l < m_; ++l) {
            const double g = inst.penalty(i, j) * inst.flow(i, j) -
                             inst.transfer_cost(k, l) * inst.transfer_time(k, l);
            const double margin = time_margin(inst, i, j, k, l);
            bool ok = form == Formulation::kCrossDock
                          ? !(inst.flow(i, j) > 0.0 && margin < -kEps)
                          : margin > kEps;
            if (k == l)
              ok = ok && (xhat(i, j) || (form == Formulation::kCrossDock && xhat(j, i)));
            gain_[Index(i, j, k, l)] = g;
            feasible_[Index(i, j, k, l)] = ok ? 1 : 0;
            if (!ok) continue;
            const double saving = std::max(0.0, g);
            best_any_[i * n_ + j] = std::max(best_any_[i * n_ + j], saving);
            best_from_[(i * n_ + j) * m_ + k] = std::max(best_from_[(i * n_ + j) * m_ + k], saving);
            best_to_[(i * n_ + j) * m_ + l] = std::max(best_to_[(i * n_ + j) * m_ + l], saving);
          }
        }
      }
    }
    if (inst.self_flows != SelfFlows::kLiteral) return;
    for (int i = 0; i < n_; ++i) {
      const double pf = inst.penalty(i, i) * inst.flow(i, i);
      if (form == Formulation::kCrossDock) {
        double cheapest = kInfinity;
        for (int k = 0; k < m_; ++k)
          for (int l = 0; l < m_; ++l)
            cheapest = std::min(cheapest, inst.transfer_cost(k, l) * inst.transfer_time(k, l));
        diag_fixed_[i] = std::max(0.0, pf - cheapest);
      } else {
        for (int k = 0; k < m_; ++k) {
          diag_at_[i * m_ + k] =
              std::max(0.0, pf - inst.transfer_cost(k, k) * inst.transfer_time(k, k));
          diag_any_[i] = std::max(diag_any_[i], diag_at_[i * m_ + k]);
        }
      }
    }
  }

  double gain(int i, int j, int k, int l) const { return gain_[Index(i, j, k, l)]; }
  bool feasible(int i, int j, int k, int l) const { return feasible_[Index(i, j, k, l)] != 0; }

  // Upper bound on the savings reachable from any completion of `dock`, or
  // -infinity when the decided part is already infeasible.
  double OptimisticSavings(const std::vector<int>& dock,
                           const std::vector<bool>& decided) const {
    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        const bool di = decided[i];
        const bool dj = decided[j];
        const int k = dock[i];
        const int l = dock[j];
        if (di && k == kUnassigned) continue;
        if (dj && l == kUnassigned) continue;
        if (di && dj) {
          if (form_ == Formulation::kCrossDock) {
            if (!feasible(i, j, k, l)) return -kInfinity;
            total += gain(i, j, k, l);
          } else if (feasible(i, j, k, l)) {
            total += std::max(0.0, gain(i, j, k, l));
          }
        } else if (di) {
          total += best_from_[(i * n_ + j) * m_ + k];
        } else if (dj) {
          total += best_to_[(i * n_ + j) * m_ + l];
        } else {
          total += best_any_[i * n_ + j];
        }
      }
    }
    if (inst_.self_flows == SelfFlows::kLiteral) {
      for (int i = 0; i < n_; ++i) {
        if (form_ == Formulation::kCrossDock) {
          total += diag_fixed_[i];
        } else if (!decided[i]) {
          total += diag_any_[i];
        } else if (dock[i] != kUnassigned) {
          total += diag_at_[i * m_ + dock[i]];
        }
      }
    }
    return total;
  }

 private:
  std::size_t Index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * m_ + k) * m_ + l;
  }

  const Instance& inst_;
  Formulation form_;
  int n_;
  int m_;
  std::vector<double> gain_;
  std::vector<char> feasible_;
  std::vector<double> best_any_;
  std::vector<double> best_from_;
  std::vector<double> best_to_;
  std::vector<double> diag_fixed_;
  std::vector<double> diag_at_;
  std::vector<double> diag_any_;
};

class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, Formulation form, const Budget& budget)
      : inst_(inst),
        form_(form),
        budget_(budget),
        tables_(inst, form),
        xhat_(inst),
        events_(event_times(inst)),
        cap_(inst.effective_capacity()),
        penalty_(total_penalty_constant(inst)),
        order_(inst.n),
        dock_(inst.n, kUnassigned),
        decided_(inst.n, false),
        load_(events_.size(), 0.0) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return inst.arrival[a] < inst.arrival[b]; });
  }

  OptimizeResult Run() {
    start_ = Clock::now();
    const auto empty = evaluate_assignment(inst_, form_, dock_);
    Accept(empty);
    result_.bound_at_root = Bound();
    result_.nodes_explored = 1;
    Dfs(0);
    result_.wall_time = Clock::now() - start_;
    result_.proven_optimal = !stopped_ && all_exact_;
    result_.status = stopped_     ? SolveStatus::kBudgetExhausted
                     : all_exact_ ? SolveStatus::kOptimal
                                  : SolveStatus::kHeuristic;
    return std::move(result_);
  }

 private:
  double Bound() const {
    const double savings = tables_.OptimisticSavings(dock_, decided_);
    return savings == -kInfinity ? kInfinity : penalty_ - savings;
  }

  void Accept(const Evaluation& ev) {
    result_.best = ev.solution;
    result_.objective = ev.objective;
    result_.incumbent_trace.push_back(ev.objective.total);
    result_.incumbent_history.push_back(ev.solution);
  }

  bool OutOfBudget() {
    if (stopped_) return true;
    if (budget_.node_limit && result_.nodes_explored >= budget_.node_limit) stopped_ = true;
    if (budget_.time_limit && (result_.nodes_explored & 1023) == 0 &&
        Clock::now() - start_ >= *budget_.time_limit)
      stopped_ = true;
    return stopped_;
  }

  // Forced CROSS-DOCK transfers between truck t at dock k and the trucks
  // already docked: time/same-dock rules and their buffer load.
  bool PlaceCrossDock(int t, int k, std::vector<double>& delta) const {
    std::fill(delta.begin(), delta.end(), 0.0);
    for (int o = 0; o < inst_.n; ++o) {
      if (o == t || !decided_[o] || dock_[o] == kUnassigned) continue;
      const int l = dock_[o];
      if (!tables_.feasible(t, o, k, l) || !tables_.feasible(o, t, l, k)) return false;
      for (std::size_t r = 0; r < events_.size(); ++r)
        delta[r] += capacity_weight(inst_, t, o, events_[r]) +
                    capacity_weight(inst_, o, t, events_[r]);
    }
    for (std::size_t r = 0; r < events_.size(); ++r)
      if (load_[r] + delta[r] - cap_ > kEps) return false;
    return true;
  }

  bool PlaceRevised(int t, int k) const {
    for (int o = 0; o < inst_.n; ++o)
      if (o != t && decided_[o] && dock_[o] == k && xhat_.overlap(t, o)) return false;
    return true;
  }

  void Dfs(std::size_t depth) {
    if (depth == order_.size()) {
      const auto ev = evaluate_assignment(inst_, form_, dock_);
      if (!ev.feasible) return;
      all_exact_ = all_exact_ && ev.exact;
      if (ev.objective.total < result_.objective.total - kEps) Accept(ev);
      return;
    }
    const int t = order_[depth];
    std::vector<double> delta(events_.size(), 0.0);
    for (int option = 0; option <= inst_.m; ++option) {
      if (OutOfBudget()) return;
      const int k = option < inst_.m ? option : kUnassigned;
      if (k != kUnassigned) {
        const bool ok = form_ == Formulation::kCrossDock ? PlaceCrossDock(t, k, delta)
                                                         : PlaceRevised(t, k);
        if (!ok) continue;
      } else {
        std::fill(delta.begin(), delta.end(), 0.0);
      }
      ++result_.nodes_explored;
      dock_[t] = k;
      decided_[t] = true;
      for (std::size_t r = 0; r < load_.size(); ++r) load_[r] += delta[r];
      if (Bound() < result_.objective.total - kEps) Dfs(depth + 1);
      for (std::size_t r = 0; r < load_.size(); ++r) load_[r] -= delta[r];
      dock_[t] = kUnassigned;
      decided_[t] = false;
    }
  }

  const Instance& inst_;
  Formulation form_;
  Budget budget_;
  PairTables tables_;
  Precedence xhat_;
  std::vector<double> events_;
  double cap_;
  double penalty_;
  std::vector<int> order_;
  std::vector<int> dock_;
  std::vector<bool> decided_;
  std::vector<double> load_;
  OptimizeResult result_;
  Clock::time_point start_;
  bool stopped_ = false;
  bool all_exact_ = true;
};

// Transfers worth trying for one assignment in the exhaustive search.
// CROSS-DOCK: linking and pair forcing leave exactly the full set of docked
// pairs; any other subset fails check_solution. R-CROSS-DOCK: every docked
// pair that is admissible on its own and has positive gain, since dropping
// a transfer keeps a revised solution feasible and a nonpositive gain never
// lowers the objective. Diagonal transfers (literal mode) are optional in
// both models; in CROSS-DOCK only the cheapest (k, l) is worth listing.
struct BruteCandidates {
  std::vector<Transfer> fixed;
  std::vector<Transfer> optional;
};

BruteCandidates ListCandidates(const Instance& inst, const std::vector<int>& dock,
                               Formulation form) {
  BruteCandidates out;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || dock[i] == kUnassigned || dock[j] == kUnassigned) continue;
      const Transfer t{i, j, dock[i], dock[j]};
      if (form == Formulation::kCrossDock) {
        out.fixed.push_back(t);
        continue;
      }
      const Solution single{dock, {t}};
      if (residual_time_feasibility(inst, single, i, j, t.k, t.l, form).violated) continue;
      if (t.k == t.l && residual_same_dock(inst, single, i, j, t.k, form).violated) continue;
      const double gain = inst.penalty(i, j) * inst.flow(i, j) -
                          inst.transfer_cost(t.k, t.l) * inst.transfer_time(t.k, t.l);
      if (gain > 0.0) out.optional.push_back(t);
    }
  }
  if (inst.self_flows == SelfFlows::kLiteral) {
    for (int i = 0; i < inst.n; ++i) {
      if (form == Formulation::kRCrossDock) {
        if (dock[i] != kUnassigned) out.optional.push_back({i, i, dock[i], dock[i]});
        continue;
      }
      Transfer cheapest{i, i, 0, 0};
      for (int k = 0; k < inst.m; ++k)
        for (int l = 0; l < inst.m; ++l)
          if (inst.transfer_cost(k, l) * inst.transfer_time(k, l) <
              inst.transfer_cost(cheapest.k, cheapest.l) *
                  inst.transfer_time(cheapest.k, cheapest.l))
            cheapest = {i, i, k, l};
      out.optional.push_back(cheapest);
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kBudgetExhausted: return "budget_exhausted";
    case SolveStatus::kHeuristic: return "heuristic";
  }
  return "unknown";
}

double node_lower_bound(const Instance& inst, Formulation form,
                        const std::vector<int>& dock, const std::vector<bool>& decided) {
  const PairTables tables(inst, form);
  const double savings = tables.OptimisticSavings(dock, decided);
  return savings == -kInfinity ? kInfinity : total_penalty_constant(inst) - savings;
}

OptimizeResult branch_and_bound(const Instance& inst, Formulation form,
                                const Budget& budget) {
  require_valid(inst);
  return BranchAndBound(inst, form, budget).Run();
}

OptimizeResult brute_force(const Instance& inst, Formulation form) {
  require_valid(inst);
  if (std::pow(inst.m + 1.0, inst.n) > kBruteForceLimit)
    throw InstanceTooLarge(fmt::format("instance_too_large: (m+1)^n = {}^{} exceeds {}",
                                       inst.m + 1, inst.n, kBruteForceLimit));
  const auto start = Clock::now();
  OptimizeResult result;
  result.objective.total = kInfinity;

  std::vector<int> dock(inst.n, kUnassigned);
  // Odometer over {unassigned, 0, .., m-1} per truck.
  while (true) {
    ++result.nodes_explored;
    const auto cand = ListCandidates(inst, dock, form);
    if (cand.optional.size() > 24)
      throw InstanceTooLarge("instance_too_large: too many candidate transfers");
    const std::uint64_t subsets = std::uint64_t{1} << cand.optional.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Solution sol{dock, cand.fixed};
      for (std::size_t c = 0; c < cand.optional.size(); ++c)
        if (mask >> c & 1U) sol.transfers.push_back(cand.optional[c]);
      if (!check_solution(inst, sol, form).feasible()) continue;
      const auto obj = objective_value(inst, sol, form);
      if (obj.total < result.objective.total - kEps) {
        result.best = sol;
        result.best.transfers = sol.sorted_transfers();
        result.objective = obj;
        result.incumbent_trace.push_back(obj.total);
        result.incumbent_history.push_back(result.best);
      }
    }

    int t = 0;
    for (; t < inst.n; ++t) {
      if (dock[t] + 1 < inst.m) {
        ++dock[t];
        break;
      }
      dock[t] = kUnassigned;
    }
    if (t == inst.n) break;
  }

  result.proven_optimal = true;
  result.status = SolveStatus::kOptimal;
  result.bound_at_root = result.objective.total;
  result.wall_time = Clock::now() - start;
  return result;
}

ModelComparison compare_models(const Instance& inst, const Budget& budget) {
  ModelComparison cmp;
  cmp.crossdock = branch_and_bound(inst, Formulation::kCrossDock, budget);
  cmp.rcrossdock = branch_and_bound(inst, Formulation::kRCrossDock, budget);
  const double cd = cmp.crossdock.objective.total;
  const double rcd = cmp.rcrossdock.objective.total;
  cmp.absolute_gap = cd - rcd;
  cmp.relative_gap_percent = std::abs(cd) > kEps ? 100.0 * (cd - rcd) / cd : 0.0;
  cmp.rcd_under_cd = check_solution(inst, cmp.rcrossdock.best, Formulation::kCrossDock);
  cmp.rcd_infeasible_in_cd = !cmp.rcd_under_cd.feasible();
  return cmp;
}

}  // namespace crossdock
