#include "crossdock/vns.hpp"

#include <algorithm>
#include <numeric>

#include "crossdock/random.hpp"
#include "crossdock/subproblem.hpp"

namespace crossdock {

namespace {

using Clock = std::chrono::steady_clock;

int LaterArrival(const Instance& inst, int a, int b) {
  if (inst.arrival[a] != inst.arrival[b]) return inst.arrival[a] > inst.arrival[b] ? a : b;
  return std::max(a, b);
}

class Search {
 public:
  Search(const Instance& inst, Formulation form, const VnsConfig& cfg)
      : inst_(inst), form_(form), cfg_(cfg), rng_(cfg.rng_seed) {}

  OptimizeResult Run(std::vector<int> start) {
    const auto t0 = Clock::now();
    OptimizeResult result;
    result.rng_algorithm = kVnsRngAlgorithm;

    Point current = Evaluate(repair_assignment(inst_, form_, std::move(start)));
    Point best = current;
    Record(result, best);

    std::uint64_t iter = 0;
    int k = 1;
    while (iter < cfg_.iter_max && Clock::now() - t0 < cfg_.time_budget) {
      Point candidate = LocalDescent(Evaluate(Shake(current.dock, k)));
      ++iter;
      ++result.nodes_explored;
      if (candidate.objective < current.objective - kEps) {
        current = std::move(candidate);
        k = 1;
      } else {
        k = k >= cfg_.k_max ? 1 : k + 1;
      }
      if (current.objective < best.objective - kEps) best = current;
      Record(result, best);
    }

    result.best = best.eval.solution;
    result.objective = best.eval.objective;
    result.proven_optimal = false;
    result.status = SolveStatus::kHeuristic;
    result.bound_at_root = 0.0;
    result.wall_time = Clock::now() - t0;
    if (result.nodes_explored == 0) result.nodes_explored = 1;
    return result;
  }

 private:
  struct Point {
    std::vector<int> dock;
    Evaluation eval;
    double objective = 0.0;
  };

  Point Evaluate(std::vector<int> dock) const {
    Point p;
    p.eval = evaluate_assignment(inst_, form_, dock);
    p.objective = p.eval.objective.total;
    p.dock = std::move(dock);
    return p;
  }

  static void Record(OptimizeResult& result, const Point& best) {
    result.incumbent_trace.push_back(best.objective);
    result.incumbent_history.push_back(best.eval.solution);
  }

  std::vector<int> Shake(std::vector<int> dock, int k) {
    std::vector<int> trucks(inst_.n);
    std::iota(trucks.begin(), trucks.end(), 0);
    const int moves = std::min(k, inst_.n);
    for (int s = 0; s < moves; ++s) {
      const int pick = s + static_cast<int>(UniformBelow(rng_, inst_.n - s));
      std::swap(trucks[s], trucks[pick]);
      const int t = trucks[s];
      // Options 0..m-1 are docks, m is "unassigned"; skip the current one.
      const int current = dock[t] == kUnassigned ? inst_.m : dock[t];
      int option = static_cast<int>(UniformBelow(rng_, inst_.m));
      if (option >= current) ++option;
      dock[t] = option == inst_.m ? kUnassigned : option;
    }
    return repair_assignment(inst_, form_, std::move(dock));
  }

  bool Improves(const std::vector<int>& dock, const Point& ref, Point& out) const {
    auto ev = evaluate_assignment(inst_, form_, dock);
    if (!ev.feasible || !(ev.objective.total < ref.objective - kEps)) return false;
    out.objective = ev.objective.total;
    out.eval = std::move(ev);
    out.dock = dock;
    return true;
  }

  // One pass over a neighborhood; true when `p` moved.
  template <typename Visit>
  bool Step(Point& p, Visit&& for_each_neighbor) const {
    Point best = p;
    bool moved = false;
    for_each_neighbor(p.dock, [&](const std::vector<int>& nb) {
      Point cand;
      if (!Improves(nb, best, cand)) return false;
      best = std::move(cand);
      moved = true;
      return cfg_.local_search == LocalSearch::kFirstImprovement;
    });
    if (moved) p = std::move(best);
    return moved;
  }

  Point LocalDescent(Point p) const {
    auto reassign = [this](const std::vector<int>& base, auto&& visit) {
      auto dock = base;
      for (int t = 0; t < inst_.n; ++t) {
        for (int option = 0; option <= inst_.m; ++option) {
          const int k = option == inst_.m ? kUnassigned : option;
          if (k == base[t]) continue;
          dock[t] = k;
          const bool stop = visit(dock);
          dock[t] = base[t];
          if (stop) return;
        }
      }
    };
    auto swap_docks = [this](const std::vector<int>& base, auto&& visit) {
      auto dock = base;
      for (int t = 0; t < inst_.n; ++t) {
        for (int u = t + 1; u < inst_.n; ++u) {
          if (base[t] == base[u]) continue;
          std::swap(dock[t], dock[u]);
          const bool stop = visit(dock);
          std::swap(dock[t], dock[u]);
          if (stop) return;
        }
      }
    };
    while (true) {
      if (Step(p, reassign)) continue;
      if (Step(p, swap_docks)) continue;
      return p;
    }
  }

  const Instance& inst_;
  Formulation form_;
  VnsConfig cfg_;
  Rng rng_;
};

}  // namespace

std::vector<int> repair_assignment(const Instance& inst, Formulation form,
                                   std::vector<int> dock) {
  while (true) {
    const auto ev = evaluate_assignment(inst, form, dock);
    if (ev.feasible) return dock;
    const auto& w = ev.witness.front();
    if (w.family == Family::kCapacity) {
      int latest = -1;
      for (int i = 0; i < inst.n; ++i)
        if (dock[i] != kUnassigned && (latest < 0 || LaterArrival(inst, i, latest) == i))
          latest = i;
      dock[latest] = kUnassigned;
    } else {
      dock[LaterArrival(inst, w.indices[0], w.indices[1])] = kUnassigned;
    }
  }
}

std::vector<int> greedy_assignment(const Instance& inst, Formulation form) {
  std::vector<double> exposure(inst.n, 0.0);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (i != j)
        exposure[i] += inst.penalty(i, j) * inst.flow(i, j) + inst.penalty(j, i) * inst.flow(j, i);
  std::vector<int> order(inst.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return exposure[a] > exposure[b]; });

  std::vector<int> dock(inst.n, kUnassigned);
  double current = evaluate_assignment(inst, form, dock).objective.total;
  for (int t : order) {
    int choice = kUnassigned;
    for (int k = 0; k < inst.m; ++k) {
      dock[t] = k;
      const auto ev = evaluate_assignment(inst, form, dock);
      if (ev.feasible && ev.objective.total < current - kEps) {
        current = ev.objective.total;
        choice = k;
      }
    }
    dock[t] = choice;
  }
  return dock;
}

OptimizeResult vns_solve(const Instance& inst, Formulation form, const VnsConfig& cfg,
                         const std::optional<std::vector<int>>& start) {
  require_valid(inst);
  if (cfg.k_max < 1) throw Error("VnsConfig: k_max must be at least 1");
  auto initial = start ? *start : greedy_assignment(inst, form);
  if (initial.size() != static_cast<std::size_t>(inst.n))
    throw Error("vns_solve: starting assignment has the wrong length");
  return Search(inst, form, cfg).Run(std::move(initial));
}

}  // namespace crossdock
