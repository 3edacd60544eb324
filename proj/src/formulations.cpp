#include "crossdock/formulations.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace crossdock {

namespace {

int Y(const Solution& sol, int i, int k) { return sol.dock[i] == k ? 1 : 0; }

int Z(const Solution& sol, int i, int j, int k, int l) {
  return sol.has_transfer({i, j, k, l}) ? 1 : 0;
}

// Diagonal transfers only exist in literal self-flow mode. The linking rows
// of CROSS-DOCK are quantified over j != i, the revised ones are not.
bool LinkApplies(Formulation form, int i, int j) {
  return i != j || form == Formulation::kRCrossDock;
}

std::string Tuple(const Transfer& t) {
  return fmt::format("{},{},{},{}", t.i + 1, t.j + 1, t.k + 1, t.l + 1);
}

double Load(const Instance& inst, const std::vector<Transfer>& transfers, double t) {
  double load = 0.0;
  for (const auto& tr : transfers) load += capacity_weight(inst, tr.i, tr.j, t);
  return load;
}

}  // namespace

std::string_view to_string(Formulation form) {
  return form == Formulation::kCrossDock ? "crossdock" : "r-crossdock";
}

std::optional<Formulation> parse_formulation(std::string_view text) {
  if (text == "crossdock" || text == "cross-dock" || text == "cd")
    return Formulation::kCrossDock;
  if (text == "r-crossdock" || text == "r-cross-dock" || text == "rcd")
    return Formulation::kRCrossDock;
  return std::nullopt;
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kDockUniqueness: return "DockUniqueness";
    case Family::kLinkZYi: return "LinkZY_i";
    case Family::kLinkZYj: return "LinkZY_j";
    case Family::kPairForcing: return "PairForcing";
    case Family::kSameDockTW: return "SameDockTW";
    case Family::kCapacity: return "Capacity";
    case Family::kTimeFeasibility: return "TimeFeasibility";
    case Family::kDockConflict: return "DockConflict";
  }
  return "Unknown";
}

bool applies_to(Family family, Formulation form) {
  if (family == Family::kPairForcing) return form == Formulation::kCrossDock;
  if (family == Family::kDockConflict) return form == Formulation::kRCrossDock;
  return true;
}

std::string ConstraintId::ToString() const {
  std::string out(to_string(family));
  out += "(";
  for (std::size_t p = 0; p < indices.size(); ++p) {
    if (p) out += ",";
    out += std::to_string(indices[p] + 1);
  }
  return out + ")";
}

bool ViolationReport::contains(const ConstraintId& id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.id == id; });
}

UnlinkedTransfer::UnlinkedTransfer(const Transfer& t)
    : Error(fmt::format("unlinked_transfer({})", Tuple(t))), transfer(t) {}

double capacity_weight(const Instance& inst, int i, int j, double t) {
  double w = 0.0;
  if (inst.arrival[i] <= t + kEps) w += inst.flow(i, j);
  if (inst.departure[j] <= t + kEps) w -= inst.flow(i, j);
  return w;
}

ObjectiveBreakdown objective_value(const Instance& inst, const Solution& sol,
                                   Formulation form) {
  check_structure(inst, sol);
  const auto transfers = sol.sorted_transfers();
  ObjectiveBreakdown out;
  std::vector<char> served(static_cast<std::size_t>(inst.n) * inst.n, 0);
  for (const auto& t : transfers) {
    if (LinkApplies(form, t.i, t.j) && (sol.dock[t.i] != t.k || sol.dock[t.j] != t.l))
      throw UnlinkedTransfer(t);
    out.transfer_cost_total += inst.transfer_cost(t.k, t.l) * inst.transfer_time(t.k, t.l);
    served[t.i * inst.n + t.j] = 1;
    if (inst.flow(t.i, t.j) > 0.0) ++out.fulfilled_pairs;
  }
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (inst.includes_pair(i, j) && !served[i * inst.n + j])
        out.penalty_total += inst.penalty(i, j) * inst.flow(i, j);
  out.total = out.transfer_cost_total + out.penalty_total;
  return out;
}

Residual residual_pair_forcing(const Instance& inst, const Solution& sol, int i, int j,
                               int k, int l, Formulation form) {
  if (form != Formulation::kCrossDock)
    throw Error("PairForcing exists only in the crossdock formulation");
  (void)inst;
  const double value = Y(sol, i, k) + Y(sol, j, l) - 1 - Z(sol, i, j, k, l);
  return {value, value > kEps};
}

Residual residual_time_feasibility(const Instance& inst, const Solution& sol, int i,
                                   int j, int k, int l, Formulation form) {
  const int z = Z(sol, i, j, k, l);
  const double margin = time_margin(inst, i, j, k, l);
  if (form == Formulation::kCrossDock) {
    const double f = inst.flow(i, j);
    const double value = -f * z * margin;
    return {value, z == 1 && f > 0.0 && margin < -kEps};
  }
  return {z * -margin, z == 1 && margin <= kEps};
}

Residual residual_same_dock(const Instance& inst, const Solution& sol, int i, int j,
                            int k, Formulation form) {
  const Precedence xhat(inst);
  double bound = xhat(i, j) ? 1.0 : 0.0;
  if (form == Formulation::kCrossDock && xhat(j, i)) bound += 1.0;
  const double value = Z(sol, i, j, k, k) - bound;
  return {value, value > kEps};
}

Residual residual_dock_conflict(const Instance& inst, const Solution& sol, int i, int j,
                                int k) {
  const Precedence xhat(inst);
  const double value = Y(sol, i, k) + Y(sol, j, k) - 1 - (xhat(i, j) ? 1 : 0) -
                       (xhat(j, i) ? 1 : 0);
  return {value, value > kEps};
}

Residual residual_capacity(const Instance& inst, const Solution& sol, int r) {
  const auto events = event_times(inst);
  if (r < 0 || r >= static_cast<int>(events.size()))
    throw Error(fmt::format("event index {} out of range 1..{}", r + 1, events.size()));
  const double value = Load(inst, sol.transfers, events[r]) - inst.effective_capacity();
  return {value, value > kEps};
}

ViolationReport check_solution(const Instance& inst, const Solution& sol,
                               Formulation form) {
  check_structure(inst, sol);
  const Precedence xhat(inst);
  const auto transfers = sol.sorted_transfers();
  const std::set<Transfer> z(transfers.begin(), transfers.end());
  ViolationReport report;
  auto& out = report.violations;

  // DockUniqueness holds by construction: a truck carries a single dock entry.

  for (const auto& t : transfers) {
    if (!LinkApplies(form, t.i, t.j)) continue;
    if (sol.dock[t.i] != t.k)
      out.push_back({{Family::kLinkZYi, {t.i, t.j, t.k, t.l}}, 1.0, 0.0,
                     fmt::format("z_{} = 1 but truck {} is not at dock {}", Tuple(t),
                                 t.i + 1, t.k + 1)});
  }
  for (const auto& t : transfers) {
    if (!LinkApplies(form, t.i, t.j)) continue;
    if (sol.dock[t.j] != t.l)
      out.push_back({{Family::kLinkZYj, {t.i, t.j, t.k, t.l}}, 1.0, 0.0,
                     fmt::format("z_{} = 1 but truck {} is not at dock {}", Tuple(t),
                                 t.j + 1, t.l + 1)});
  }

  if (form == Formulation::kCrossDock) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.n; ++j) {
        if (i == j || !sol.docked(i) || !sol.docked(j)) continue;
        const Transfer t{i, j, sol.dock[i], sol.dock[j]};
        if (!z.contains(t))
          out.push_back({{Family::kPairForcing, {t.i, t.j, t.k, t.l}}, 1.0, 0.0,
                         fmt::format("y_{}{} + y_{}{} - 1 = 1 forces z_{} = 1", i + 1,
                                     t.k + 1, j + 1, t.l + 1, Tuple(t))});
      }
    }
  }

  for (const auto& t : transfers) {
    if (t.i == t.j || t.k != t.l) continue;
    const double bound = (xhat(t.i, t.j) ? 1.0 : 0.0) +
                         (form == Formulation::kCrossDock && xhat(t.j, t.i) ? 1.0 : 0.0);
    if (bound < 1.0)
      out.push_back({{Family::kSameDockTW, {t.i, t.j, t.k}}, 1.0, bound,
                     fmt::format("trucks {} and {} share dock {} but truck {} does not "
                                 "leave before truck {} arrives",
                                 t.i + 1, t.j + 1, t.k + 1, t.i + 1, t.j + 1)});
  }

  const auto events = event_times(inst);
  const double cap = inst.effective_capacity();
  for (std::size_t r = 0; r < events.size(); ++r) {
    const double load = Load(inst, transfers, events[r]);
    if (load - cap > kEps)
      out.push_back({{Family::kCapacity, {static_cast<int>(r)}}, load, cap,
                     fmt::format("buffer load {} exceeds capacity {} at t_{} = {}", load,
                                 cap, r + 1, events[r])});
  }

  for (const auto& t : transfers) {
    if (t.i == t.j) continue;
    const auto res = residual_time_feasibility(inst, sol, t.i, t.j, t.k, t.l, form);
    if (res.violated) {
      const double margin = time_margin(inst, t.i, t.j, t.k, t.l);
      out.push_back({{Family::kTimeFeasibility, {t.i, t.j, t.k, t.l}}, margin, 0.0,
                     fmt::format("d_{} - a_{} - t_{}{} = {:.6g} {} 0", t.j + 1, t.i + 1,
                                 t.k + 1, t.l + 1, margin,
                                 form == Formulation::kCrossDock ? "<" : "<=")});
    }
  }

  if (form == Formulation::kRCrossDock) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = i + 1; j < inst.n; ++j) {
        if (!sol.docked(i) || sol.dock[i] != sol.dock[j] || !xhat.overlap(i, j)) continue;
        const int k = sol.dock[i];
        out.push_back({{Family::kDockConflict, {i, j, k}}, 2.0, 1.0,
                       fmt::format("trucks {} and {} overlap in time but share dock {}",
                                   i + 1, j + 1, k + 1)});
      }
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const Violation& a, const Violation& b) { return a.id < b.id; });
  return report;
}

}  // namespace crossdock
