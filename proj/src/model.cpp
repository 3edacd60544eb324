#include "crossdock/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include <fmt/format.h>

namespace crossdock {

Matrix Matrix::FromRows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("Matrix::FromRows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

double Instance::effective_capacity() const {
  if (capacity) return *capacity;
  double total = 0.0;
  for (std::size_t i = 0; i < flow.rows(); ++i)
    for (std::size_t j = 0; j < flow.cols(); ++j) total += flow(i, j);
  return total;
}

namespace {

const char* KindName(InstanceErrorKind kind) {
  switch (kind) {
    case InstanceErrorKind::kShapeMismatch: return "shape_mismatch";
    case InstanceErrorKind::kNonPositiveCount: return "nonpositive_count";
    case InstanceErrorKind::kWindowInverted: return "window_inverted";
    case InstanceErrorKind::kFlowVsTime: return "flow_vs_time";
    case InstanceErrorKind::kNegativeValue: return "negative_value";
    case InstanceErrorKind::kNonPositiveCapacity: return "nonpositive_capacity";
    case InstanceErrorKind::kNotFinite: return "not_finite";
  }
  return "unknown";
}

std::string JoinErrors(const std::vector<InstanceError>& errors) {
  std::string out = "invalid instance:";
  for (const auto& e : errors) out += " " + e.ToString();
  return out;
}

}  // namespace

std::string InstanceError::ToString() const {
  std::string out = KindName(kind);
  if (indices.empty() && field.empty()) return out;
  out += "(";
  bool first = true;
  if (!field.empty() && kind != InstanceErrorKind::kWindowInverted &&
      kind != InstanceErrorKind::kFlowVsTime) {
    out += field;
    first = false;
  }
  for (int idx : indices) {
    if (!first) out += ",";
    out += std::to_string(idx + 1);
    first = false;
  }
  return out + ")";
}

InvalidInstance::InvalidInstance(std::vector<InstanceError> errors)
    : Error(JoinErrors(errors)), errors_(std::move(errors)) {}

Validation validate_instance(const Instance& inst) {
  Validation v;
  auto add = [&v](InstanceErrorKind kind, std::string field, std::vector<int> idx = {}) {
    v.errors.push_back({kind, std::move(field), std::move(idx)});
  };

  if (inst.n <= 0) add(InstanceErrorKind::kNonPositiveCount, "n");
  if (inst.m <= 0) add(InstanceErrorKind::kNonPositiveCount, "m");
  if (!v.errors.empty()) return v;

  const auto n = static_cast<std::size_t>(inst.n);
  const auto m = static_cast<std::size_t>(inst.m);
  const bool arrival_ok = inst.arrival.size() == n;
  const bool departure_ok = inst.departure.size() == n;
  if (!arrival_ok) add(InstanceErrorKind::kShapeMismatch, "arrival");
  if (!departure_ok) add(InstanceErrorKind::kShapeMismatch, "departure");

  struct NamedMatrix {
    const char* name;
    const Matrix* mat;
    std::size_t dim;
  };
  const NamedMatrix matrices[] = {
      {"transfer_time", &inst.transfer_time, m},
      {"transfer_cost", &inst.transfer_cost, m},
      {"flow", &inst.flow, n},
      {"penalty", &inst.penalty, n},
  };
  bool flow_ok = true;
  for (const auto& nm : matrices) {
    if (nm.mat->rows() != nm.dim || nm.mat->cols() != nm.dim) {
      add(InstanceErrorKind::kShapeMismatch, nm.name);
      if (nm.mat == &inst.flow) flow_ok = false;
      continue;
    }
    for (std::size_t r = 0; r < nm.dim; ++r) {
      for (std::size_t c = 0; c < nm.dim; ++c) {
        const double value = (*nm.mat)(r, c);
        const std::vector<int> idx{static_cast<int>(r), static_cast<int>(c)};
        if (!std::isfinite(value)) {
          add(InstanceErrorKind::kNotFinite, nm.name, idx);
          if (nm.mat == &inst.flow) flow_ok = false;
        } else if (value < 0.0) {
          add(InstanceErrorKind::kNegativeValue, nm.name, idx);
        }
      }
    }
  }

  if (inst.capacity && !(std::isfinite(*inst.capacity) && *inst.capacity > 0.0))
    add(InstanceErrorKind::kNonPositiveCapacity, "capacity");

  if (arrival_ok && departure_ok) {
    bool times_finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(inst.arrival[i]) || !std::isfinite(inst.departure[i])) {
        add(InstanceErrorKind::kNotFinite, "window", {static_cast<int>(i)});
        times_finite = false;
      } else if (inst.departure[i] - inst.arrival[i] <= kEps) {
        add(InstanceErrorKind::kWindowInverted, "window", {static_cast<int>(i)});
      }
    }
    if (flow_ok && times_finite) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          if (inst.flow(i, j) > 0.0 && inst.departure[j] < inst.arrival[i] - kEps)
            add(InstanceErrorKind::kFlowVsTime, "flow",
                {static_cast<int>(i), static_cast<int>(j)});
        }
      }
    }
  }

  v.over_constrained = inst.n > inst.m;
  return v;
}

Instance zero_unreachable_flows(Instance inst) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (i != j && inst.departure[j] < inst.arrival[i] - kEps) inst.flow(i, j) = 0.0;
  return inst;
}

void require_valid(const Instance& inst) {
  auto v = validate_instance(inst);
  if (!v.ok()) throw InvalidInstance(std::move(v.errors));
}

Precedence::Precedence(const Instance& inst)
    : n_(inst.n), bits_(static_cast<std::size_t>(inst.n) * inst.n, 0) {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && inst.departure[i] <= inst.arrival[j] + kEps) bits_[i * n_ + j] = 1;
}

std::vector<double> event_times(const Instance& inst) {
  std::vector<double> events;
  events.reserve(2 * inst.arrival.size());
  events.insert(events.end(), inst.arrival.begin(), inst.arrival.end());
  events.insert(events.end(), inst.departure.begin(), inst.departure.end());
  std::stable_sort(events.begin(), events.end());
  return events;
}

double total_penalty_constant(const Instance& inst) {
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (inst.includes_pair(i, j)) total += inst.penalty(i, j) * inst.flow(i, j);
  return total;
}

bool Solution::has_transfer(const Transfer& t) const {
  return std::find(transfers.begin(), transfers.end(), t) != transfers.end();
}

std::vector<Transfer> Solution::sorted_transfers() const {
  auto out = transfers;
  std::sort(out.begin(), out.end());
  return out;
}

void check_structure(const Instance& inst, const Solution& sol) {
  if (sol.dock.size() != static_cast<std::size_t>(inst.n))
    throw Error(fmt::format("solution has {} dock entries, instance has {} trucks",
                            sol.dock.size(), inst.n));
  for (int i = 0; i < inst.n; ++i) {
    const int k = sol.dock[i];
    if (k != kUnassigned && (k < 0 || k >= inst.m))
      throw Error(fmt::format("truck {} assigned to nonexistent dock {}", i + 1, k + 1));
  }
  std::set<std::pair<int, int>> pairs;
  for (const auto& t : sol.transfers) {
    if (t.i < 0 || t.i >= inst.n || t.j < 0 || t.j >= inst.n || t.k < 0 ||
        t.k >= inst.m || t.l < 0 || t.l >= inst.m)
      throw Error(fmt::format("transfer ({},{},{},{}) out of range", t.i + 1, t.j + 1,
                              t.k + 1, t.l + 1));
    if (!inst.includes_pair(t.i, t.j))
      throw Error(fmt::format("self transfer ({},{},{},{}) requires literal self-flow mode",
                              t.i + 1, t.j + 1, t.k + 1, t.l + 1));
    if (!pairs.emplace(t.i, t.j).second)
      throw Error(fmt::format("truck pair ({},{}) carries more than one transfer", t.i + 1,
                              t.j + 1));
  }
}

}  // namespace crossdock
