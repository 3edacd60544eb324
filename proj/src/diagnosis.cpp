#include "crossdock/diagnosis.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace crossdock {

namespace {

// Subscript in the usual notation: "1212" for small indices, "{10,2,1,2}"
// otherwise.
std::string Sub(std::initializer_list<int> zero_based) {
  const bool compact = std::all_of(zero_based.begin(), zero_based.end(),
                                   [](int v) { return v + 1 <= 9; });
  std::string out;
  for (int v : zero_based) {
    if (!compact && !out.empty()) out += ",";
    out += std::to_string(v + 1);
  }
  return compact ? out : "{" + out + "}";
}

bool TimeRowForcesZero(const Instance& inst, int i, int j, int k, int l, Formulation form) {
  const double margin = time_margin(inst, i, j, k, l);
  if (form == Formulation::kCrossDock) return inst.flow(i, j) > 0.0 && margin < -kEps;
  return margin <= kEps;
}

double SameDockBound(const Precedence& xhat, int i, int j, Formulation form) {
  return (xhat(i, j) ? 1.0 : 0.0) + (form == Formulation::kCrossDock && xhat(j, i) ? 1.0 : 0.0);
}

// Order used by the filter: index tuple first, so the surviving conflict is
// the one on the smallest indices.
bool ByIndices(const ConstraintId& a, const ConstraintId& b) {
  if (a.indices != b.indices) return a.indices < b.indices;
  return a.family < b.family;
}

std::string Describe(const Instance& inst, const std::vector<int>& dock, Formulation form,
                     const ConstraintId& c) {
  const auto& x = c.indices;
  switch (c.family) {
    case Family::kPairForcing:
      return fmt::format("y_{} + y_{} <= 1 + z_{} with y_{} = y_{} = 1 forces z_{} = 1",
                         Sub({x[0], x[2]}), Sub({x[1], x[3]}), Sub({x[0], x[1], x[2], x[3]}),
                         Sub({x[0], x[2]}), Sub({x[1], x[3]}), Sub({x[0], x[1], x[2], x[3]}));
    case Family::kTimeFeasibility: {
      const double margin = time_margin(inst, x[0], x[1], x[2], x[3]);
      const auto z = Sub({x[0], x[1], x[2], x[3]});
      if (form == Formulation::kCrossDock)
        return fmt::format(
            "f_{} * z_{} * (d_{} - a_{} - t_{}) >= 0 with f_{} = {} and d_{} - a_{} - t_{} = "
            "{:.6g} < 0 forces z_{} = 0",
            Sub({x[0], x[1]}), z, Sub({x[1]}), Sub({x[0]}), Sub({x[2], x[3]}),
            Sub({x[0], x[1]}), inst.flow(x[0], x[1]), Sub({x[1]}), Sub({x[0]}),
            Sub({x[2], x[3]}), margin, z);
      return fmt::format("d_{} - a_{} - t_{} = {:.6g} <= 0 fixes z_{} = 0", Sub({x[1]}),
                         Sub({x[0]}), Sub({x[2], x[3]}), margin, z);
    }
    case Family::kSameDockTW:
      return fmt::format("z_{} <= {} = 0 forces z_{} = 0", Sub({x[0], x[1], x[2], x[2]}),
                         form == Formulation::kCrossDock
                             ? fmt::format("xhat_{} + xhat_{}", Sub({x[0], x[1]}),
                                           Sub({x[1], x[0]}))
                             : fmt::format("xhat_{}", Sub({x[0], x[1]})),
                         Sub({x[0], x[1], x[2], x[2]}));
    case Family::kLinkZYi:
      return fmt::format("z_{} <= y_{} = {}", Sub({x[0], x[1], x[2], x[3]}),
                         Sub({x[0], x[2]}), dock[x[0]] == x[2] ? 1 : 0);
    case Family::kLinkZYj:
      return fmt::format("z_{} <= y_{} = {}", Sub({x[0], x[1], x[2], x[3]}),
                         Sub({x[1], x[3]}), dock[x[1]] == x[3] ? 1 : 0);
    case Family::kCapacity: {
      const auto events = event_times(inst);
      return fmt::format("buffer load at t_{} = {} must stay within C = {}", x[0] + 1,
                         events[x[0]], inst.effective_capacity());
    }
    case Family::kDockConflict:
      return fmt::format("y_{} + y_{} <= 1 + xhat_{} + xhat_{} = 1 but both trucks use dock {}",
                         Sub({x[0], x[2]}), Sub({x[1], x[2]}), Sub({x[0], x[1]}),
                         Sub({x[1], x[0]}), x[2] + 1);
    case Family::kDockUniqueness:
      return fmt::format("truck {} uses at most one dock", x[0] + 1);
  }
  return c.ToString();
}

}  // namespace

bool rows_satisfiable(const Instance& inst, const std::vector<int>& dock,
                      Formulation form, const std::vector<ConstraintId>& rows) {
  const Precedence xhat(inst);
  struct Bounds {
    bool lower = false;
    bool upper = true;
  };
  std::map<Transfer, Bounds> vars;
  std::vector<int> capacity_rows;

  for (const auto& row : rows) {
    const auto& x = row.indices;
    switch (row.family) {
      case Family::kPairForcing:
        if (dock[x[0]] == x[2] && dock[x[1]] == x[3]) vars[{x[0], x[1], x[2], x[3]}].lower = true;
        break;
      case Family::kLinkZYi:
        if (dock[x[0]] != x[2]) vars[{x[0], x[1], x[2], x[3]}].upper = false;
        break;
      case Family::kLinkZYj:
        if (dock[x[1]] != x[3]) vars[{x[0], x[1], x[2], x[3]}].upper = false;
        break;
      case Family::kSameDockTW:
        if (SameDockBound(xhat, x[0], x[1], form) < 1.0)
          vars[{x[0], x[1], x[2], x[2]}].upper = false;
        break;
      case Family::kTimeFeasibility:
        if (TimeRowForcesZero(inst, x[0], x[1], x[2], x[3], form))
          vars[{x[0], x[1], x[2], x[3]}].upper = false;
        break;
      case Family::kCapacity:
        capacity_rows.push_back(x[0]);
        break;
      case Family::kDockConflict:
        if (dock[x[0]] == x[2] && dock[x[1]] == x[2] && xhat.overlap(x[0], x[1])) return false;
        break;
      case Family::kDockUniqueness:
        break;
    }
  }

  for (const auto& [t, b] : vars)
    if (b.lower && !b.upper) return false;

  // Loads are nonnegative for valid instances, so the lightest buffer is the
  // one with only the forced transfers.
  if (!capacity_rows.empty()) {
    const auto events = event_times(inst);
    const double cap = inst.effective_capacity();
    for (int r : capacity_rows) {
      double load = 0.0;
      for (const auto& [t, b] : vars)
        if (b.lower) load += capacity_weight(inst, t.i, t.j, events[r]);
      if (load - cap > kEps) return false;
    }
  }
  return true;
}

std::vector<ConstraintId> active_rows(const Instance& inst, const std::vector<int>& dock,
                                      Formulation form) {
  const Precedence xhat(inst);
  std::vector<ConstraintId> rows;
  if (form == Formulation::kCrossDock) {
    for (int i = 0; i < inst.n; ++i) {
      for (int j = 0; j < inst.n; ++j) {
        if (i == j || dock[i] == kUnassigned || dock[j] == kUnassigned) continue;
        const int k = dock[i];
        const int l = dock[j];
        rows.push_back({Family::kLinkZYi, {i, j, k, l}});
        rows.push_back({Family::kLinkZYj, {i, j, k, l}});
        rows.push_back({Family::kPairForcing, {i, j, k, l}});
        if (k == l && SameDockBound(xhat, i, j, form) < 1.0)
          rows.push_back({Family::kSameDockTW, {i, j, k}});
        if (TimeRowForcesZero(inst, i, j, k, l, form))
          rows.push_back({Family::kTimeFeasibility, {i, j, k, l}});
      }
    }
  } else {
    for (int i = 0; i < inst.n; ++i)
      for (int j = i + 1; j < inst.n; ++j)
        if (dock[i] != kUnassigned && dock[i] == dock[j] && xhat.overlap(i, j))
          rows.push_back({Family::kDockConflict, {i, j, dock[i]}});
  }
  for (int r = 0; r < 2 * inst.n; ++r) rows.push_back({Family::kCapacity, {r}});
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::optional<ConflictSet> find_conflict(const Instance& inst, const std::vector<int>& dock,
                                         Formulation form) {
  auto rows = active_rows(inst, dock, form);
  if (rows_satisfiable(inst, dock, form, rows)) return std::nullopt;

  std::sort(rows.begin(), rows.end(), ByIndices);
  for (std::size_t p = rows.size(); p-- > 0;) {
    auto without = rows;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(p));
    if (!rows_satisfiable(inst, dock, form, without)) rows = std::move(without);
  }

  ConflictSet out;
  out.minimal = true;
  for (std::size_t p = 0; p < rows.size(); ++p) {
    auto without = rows;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(p));
    if (!rows_satisfiable(inst, dock, form, without)) out.minimal = false;
  }
  std::sort(rows.begin(), rows.end());
  out.constraints = rows;

  for (const auto& c : rows) {
    if (!out.narrative.empty()) out.narrative += ";\n";
    out.narrative += Describe(inst, dock, form, c);
  }
  out.narrative += ";\n=> contradiction";
  return out;
}

PairExplanation explain_pair(const Instance& inst, int i, int j, int k, int l,
                             Formulation form) {
  if (i == j) throw Error("explain_pair needs two distinct trucks");
  if (form == Formulation::kRCrossDock)
    return {PairAnomaly::kNone,
            fmt::format("no anomaly: r-crossdock chooses z_{} and z_{} independently",
                        Sub({i, j, k, l}), Sub({j, i, l, k}))};

  const Precedence xhat(inst);
  const double f_ij = inst.flow(i, j);
  const double f_ji = inst.flow(j, i);
  const double margin = time_margin(inst, i, j, k, l);
  const double reverse_margin = time_margin(inst, j, i, l, k);
  const bool reverse_allowed = reverse_margin >= -kEps && (k != l || xhat(j, i) || xhat(i, j));

  if (!(f_ij > 0.0) && f_ji > 0.0 && reverse_allowed) {
    return {PairAnomaly::kPhantomTransfer,
            fmt::format("phantom transfer: f_{} = 0, but docking truck {} at {} and truck {} "
                        "at {} for the transfer z_{} also forces z_{} = 1, charging "
                        "c_{} * t_{} = {} for cargo that does not exist",
                        Sub({i, j}), i + 1, k + 1, j + 1, l + 1, Sub({j, i, l, k}),
                        Sub({i, j, k, l}), Sub({k, l}), Sub({k, l}),
                        inst.transfer_cost(k, l) * inst.transfer_time(k, l))};
  }
  const double gap = inst.departure[j] - inst.arrival[i];
  if (f_ij > 0.0 && gap > kEps && margin < -kEps) {
    return {PairAnomaly::kEliminatedTransfer,
            fmt::format("eliminated transfer: d_{} - a_{} = {:.6g} > 0 but d_{} - a_{} - t_{} = "
                        "{:.6g} < 0 fixes z_{} = 0, so pair forcing forbids docking truck {} "
                        "at {} with truck {} at {} and z_{} is ruled out as well",
                        Sub({j}), Sub({i}), gap, Sub({j}), Sub({i}), Sub({k, l}), margin,
                        Sub({i, j, k, l}), i + 1, k + 1, j + 1, l + 1, Sub({j, i, l, k}))};
  }
  return {PairAnomaly::kNone, fmt::format("no anomaly for z_{}", Sub({i, j, k, l}))};
}

}  // namespace crossdock
