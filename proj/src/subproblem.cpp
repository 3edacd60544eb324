#include "crossdock/subproblem.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace crossdock {

namespace {

struct Item {
  Transfer transfer;
  double gain;
  std::vector<double> weight;  // load contribution per event time
};

struct Knapsack {
  std::vector<Item> forced;
  std::vector<Item> optional;  // gain > kEps, sorted by transfer
};

struct SelectionOutcome {
  std::optional<int> overloaded_event;  // forced transfers alone exceed C here
  std::vector<int> chosen;              // indices into Knapsack::optional
  bool exact = true;
};

Item MakeItem(const Instance& inst, const std::vector<double>& events, Transfer t) {
  Item item{t, inst.penalty(t.i, t.j) * inst.flow(t.i, t.j) -
                   inst.transfer_cost(t.k, t.l) * inst.transfer_time(t.k, t.l),
            {}};
  item.weight.reserve(events.size());
  for (double e : events) item.weight.push_back(capacity_weight(inst, t.i, t.j, e));
  return item;
}

bool Fits(const std::vector<double>& load, const std::vector<double>& w, double cap) {
  for (std::size_t r = 0; r < load.size(); ++r)
    if (load[r] + w[r] - cap > kEps) return false;
  return true;
}

void Add(std::vector<double>& load, const std::vector<double>& w, double sign = 1.0) {
  for (std::size_t r = 0; r < load.size(); ++r) load[r] += sign * w[r];
}

class ExactSearch {
 public:
  ExactSearch(const std::vector<Item>& items, std::vector<double> load, double cap)
      : items_(items), load_(std::move(load)), cap_(cap), suffix_(items.size() + 1, 0.0) {
    for (std::size_t c = items.size(); c-- > 0;) suffix_[c] = suffix_[c + 1] + items[c].gain;
  }

  std::vector<int> Run() {
    Dfs(0, 0.0);
    return best_;
  }

 private:
  // Include-first depth-first order visits subsets lexicographically, so a
  // later subset replaces the incumbent only when strictly better.
  void Dfs(std::size_t c, double gain) {
    if (gain > best_gain_ + kEps) {
      best_gain_ = gain;
      best_ = current_;
    }
    if (c == items_.size() || gain + suffix_[c] <= best_gain_ + kEps) return;
    const Item& item = items_[c];
    if (Fits(load_, item.weight, cap_)) {
      Add(load_, item.weight);
      current_.push_back(static_cast<int>(c));
      Dfs(c + 1, gain + item.gain);
      current_.pop_back();
      Add(load_, item.weight, -1.0);
    }
    Dfs(c + 1, gain);
  }

  const std::vector<Item>& items_;
  std::vector<double> load_;
  double cap_;
  std::vector<double> suffix_;
  std::vector<int> current_;
  std::vector<int> best_;
  double best_gain_ = 0.0;
};

SelectionOutcome Select(const Instance& inst, const Knapsack& ks, std::size_t n_events,
                        SelectionPolicy policy) {
  SelectionOutcome out;
  const double cap = inst.effective_capacity();
  std::vector<double> load(n_events, 0.0);
  for (const auto& f : ks.forced) Add(load, f.weight);
  for (std::size_t r = 0; r < n_events; ++r) {
    if (load[r] - cap > kEps) {
      out.overloaded_event = static_cast<int>(r);
      return out;
    }
  }

  std::vector<double> all = load;
  for (const auto& o : ks.optional) Add(all, o.weight);
  const bool binds = std::any_of(all.begin(), all.end(),
                                 [cap](double v) { return v - cap > kEps; });
  if (!binds) {
    out.chosen.resize(ks.optional.size());
    std::iota(out.chosen.begin(), out.chosen.end(), 0);
    return out;
  }

  if (policy == SelectionPolicy::kExact ||
      static_cast<int>(ks.optional.size()) <= kExactSelectionLimit) {
    out.chosen = ExactSearch(ks.optional, load, cap).Run();
    return out;
  }

  out.exact = false;
  std::vector<int> order(ks.optional.size());
  std::iota(order.begin(), order.end(), 0);
  auto density = [&](int c) {
    const auto& w = ks.optional[c].weight;
    const double peak = std::max(*std::max_element(w.begin(), w.end()), kEps);
    return ks.optional[c].gain / peak;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return density(a) > density(b); });
  for (int c : order) {
    if (Fits(load, ks.optional[c].weight, cap)) {
      Add(load, ks.optional[c].weight);
      out.chosen.push_back(c);
    }
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

bool TimeOk(const Instance& inst, int i, int j, int k, int l, Formulation form) {
  const double margin = time_margin(inst, i, j, k, l);
  if (form == Formulation::kCrossDock) return !(inst.flow(i, j) > 0.0 && margin < -kEps);
  return margin > kEps;
}

bool SameDockOk(const Precedence& xhat, int i, int j, int k, int l, Formulation form) {
  if (k != l) return true;
  return xhat(i, j) || (form == Formulation::kCrossDock && xhat(j, i));
}

// Diagonal transfers in literal self-flow mode. CROSS-DOCK leaves them
// unlinked to y, so the cheapest (k, l) is always the one to use; the revised
// model ties both ends to the truck's own dock.
void AddDiagonal(const Instance& inst, const std::vector<double>& events,
                 const std::vector<int>& dock, Formulation form, Knapsack& ks) {
  if (inst.self_flows != SelfFlows::kLiteral) return;
  for (int i = 0; i < inst.n; ++i) {
    Transfer t{i, i, 0, 0};
    if (form == Formulation::kRCrossDock) {
      if (dock[i] == kUnassigned) continue;
      t.k = t.l = dock[i];
    } else {
      double best = inst.transfer_cost(0, 0) * inst.transfer_time(0, 0);
      for (int k = 0; k < inst.m; ++k) {
        for (int l = 0; l < inst.m; ++l) {
          const double cost = inst.transfer_cost(k, l) * inst.transfer_time(k, l);
          if (cost < best - kEps) {
            best = cost;
            t.k = k;
            t.l = l;
          }
        }
      }
    }
    Item item = MakeItem(inst, events, t);
    if (item.gain > kEps) ks.optional.push_back(std::move(item));
  }
}

Solution Assemble(const std::vector<int>& dock, const Knapsack& ks,
                  const SelectionOutcome& sel) {
  Solution sol{dock, {}};
  for (const auto& f : ks.forced) sol.transfers.push_back(f.transfer);
  for (int c : sel.chosen) sol.transfers.push_back(ks.optional[c].transfer);
  std::sort(sol.transfers.begin(), sol.transfers.end());
  return sol;
}

double ChosenGain(const Knapsack& ks, const SelectionOutcome& sel) {
  double g = 0.0;
  for (int c : sel.chosen) g += ks.optional[c].gain;
  return g;
}

void SortOptional(Knapsack& ks) {
  std::sort(ks.optional.begin(), ks.optional.end(),
            [](const Item& a, const Item& b) { return a.transfer < b.transfer; });
}

}  // namespace

std::vector<CandidatePair> candidate_pairs(const Instance& inst,
                                           const std::vector<int>& dock,
                                           Formulation form) {
  const Precedence xhat(inst);
  std::vector<CandidatePair> out;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || dock[i] == kUnassigned || dock[j] == kUnassigned) continue;
      if (!(inst.flow(i, j) > 0.0)) continue;
      const int k = dock[i];
      const int l = dock[j];
      CandidatePair c{i, j, k, l,
                      inst.penalty(i, j) * inst.flow(i, j) -
                          inst.transfer_cost(k, l) * inst.transfer_time(k, l),
                      TimeOk(inst, i, j, k, l, form) && SameDockOk(xhat, i, j, k, l, form)};
      out.push_back(c);
    }
  }
  return out;
}

InducedTransfers induced_transfers_crossdock(const Instance& inst,
                                             const std::vector<int>& dock,
                                             SelectionPolicy policy) {
  const Precedence xhat(inst);
  const auto events = event_times(inst);
  InducedTransfers out;
  Knapsack ks;
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || dock[i] == kUnassigned || dock[j] == kUnassigned) continue;
      const Transfer t{i, j, dock[i], dock[j]};
      if (out.witness.empty()) {
        const ConstraintId forcing{Family::kPairForcing, {t.i, t.j, t.k, t.l}};
        if (!TimeOk(inst, i, j, t.k, t.l, Formulation::kCrossDock)) {
          out.witness = {forcing, {Family::kTimeFeasibility, {t.i, t.j, t.k, t.l}}};
        } else if (!SameDockOk(xhat, i, j, t.k, t.l, Formulation::kCrossDock)) {
          out.witness = {forcing, {Family::kSameDockTW, {t.i, t.j, t.k}}};
        }
      }
      ks.forced.push_back(MakeItem(inst, events, t));
    }
  }
  AddDiagonal(inst, events, dock, Formulation::kCrossDock, ks);
  SortOptional(ks);

  if (!out.witness.empty()) {
    out.solution = Assemble(dock, ks, {});
    return out;
  }
  const auto sel = Select(inst, ks, events.size(), policy);
  if (sel.overloaded_event) {
    out.witness = {{Family::kCapacity, {*sel.overloaded_event}}};
    out.solution = Assemble(dock, ks, {});
    return out;
  }
  out.exact = sel.exact;
  out.solution = Assemble(dock, ks, sel);
  return out;
}

DockConflictError::DockConflictError(int i_, int j_, int k_)
    : Error(fmt::format("dock_conflict: trucks {} and {} overlap on dock {}", i_ + 1,
                        j_ + 1, k_ + 1)),
      i(i_),
      j(j_),
      k(k_) {}

std::optional<ConstraintId> first_dock_conflict(const Instance& inst,
                                                const std::vector<int>& dock) {
  const Precedence xhat(inst);
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j)
      if (dock[i] != kUnassigned && dock[i] == dock[j] && xhat.overlap(i, j))
        return ConstraintId{Family::kDockConflict, {i, j, dock[i]}};
  return std::nullopt;
}

TransferSelection optimal_transfers_rcrossdock(const Instance& inst,
                                               const std::vector<int>& dock,
                                               SelectionPolicy policy) {
  if (auto conflict = first_dock_conflict(inst, dock)) {
    const auto& idx = conflict->indices;
    throw DockConflictError(idx[0], idx[1], idx[2]);
  }
  const auto events = event_times(inst);
  Knapsack ks;
  for (const auto& c : candidate_pairs(inst, dock, Formulation::kRCrossDock)) {
    if (!c.feasible || !(c.gain > kEps)) continue;
    ks.optional.push_back(MakeItem(inst, events, {c.i, c.j, c.k, c.l}));
  }
  AddDiagonal(inst, events, dock, Formulation::kRCrossDock, ks);
  SortOptional(ks);

  const auto sel = Select(inst, ks, events.size(), policy);
  TransferSelection out;
  out.exact = sel.exact;
  out.gain = ChosenGain(ks, sel);
  out.solution = Assemble(dock, ks, sel);
  return out;
}

Evaluation evaluate_assignment(const Instance& inst, Formulation form,
                               const std::vector<int>& dock, SelectionPolicy policy) {
  Evaluation ev;
  if (form == Formulation::kCrossDock) {
    auto induced = induced_transfers_crossdock(inst, dock, policy);
    ev.feasible = induced.feasible();
    ev.exact = induced.exact;
    ev.witness = std::move(induced.witness);
    ev.solution = std::move(induced.solution);
  } else if (auto conflict = first_dock_conflict(inst, dock)) {
    ev.witness = {*conflict};
    ev.solution = Solution{dock, {}};
  } else {
    auto sel = optimal_transfers_rcrossdock(inst, dock, policy);
    ev.feasible = true;
    ev.exact = sel.exact;
    ev.solution = std::move(sel.solution);
  }
  if (ev.feasible) ev.objective = objective_value(inst, ev.solution, form);
  return ev;
}

}  // namespace crossdock
