#pragma once

// Reference evaluator written straight from the two printed models, one
// constraint family at a time over full index ranges. It shares no code with
// the library beyond the Instance/Solution types and serves as the oracle for
// the evaluator, the checkers and both exact solvers. Self flows excluded.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "crossdock/io.hpp"
#include "crossdock/model.hpp"

namespace oracle {

using crossdock::Instance;
using crossdock::Transfer;

enum class Model { kOriginal, kRevised };

inline bool precedes(const Instance& inst, int i, int j) {
  return inst.departure[i] <= inst.arrival[j] + 1e-9;
}

/// Dense y (n x m) and z (n x n x m x m) built from a dock vector and a
/// transfer list.
struct Vars {
  int n, m;
  std::vector<int> y;
  std::vector<int> z;

  Vars(const Instance& inst, const std::vector<int>& dock, const std::vector<Transfer>& t)
      : n(inst.n), m(inst.m), y(n * m, 0), z(n * n * m * m, 0) {
    for (int i = 0; i < n; ++i)
      if (dock[i] >= 0) y[i * m + dock[i]] = 1;
    for (const auto& x : t) z[((x.i * n + x.j) * m + x.k) * m + x.l] = 1;
  }
  int Y(int i, int k) const { return y[i * m + k]; }
  int Z(int i, int j, int k, int l) const { return z[((i * n + j) * m + k) * m + l]; }
};

inline bool feasible(const Instance& inst, const std::vector<int>& dock,
                     const std::vector<Transfer>& transfers, Model model) {
  const Vars v(inst, dock, transfers);
  const int n = inst.n, m = inst.m;
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int k = 0; k < m; ++k) s += v.Y(i, k);
    if (s > 1) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          if (i == j) continue;
          const int z = v.Z(i, j, k, l);
          if (z > v.Y(i, k) || z > v.Y(j, l)) return false;
          if (model == Model::kOriginal && v.Y(i, k) + v.Y(j, l) - 1 > z) return false;
          if (k == l) {
            const int bound = precedes(inst, i, j) +
                              (model == Model::kOriginal ? precedes(inst, j, i) : 0);
            if (z > bound) return false;
          }
          const double margin =
              inst.departure[j] - inst.arrival[i] - inst.transfer_time(k, l);
          if (model == Model::kOriginal) {
            if (inst.flow(i, j) * z * margin < -1e-9 * inst.flow(i, j)) return false;
          } else if (margin <= 1e-9 && z != 0) {
            return false;
          }
        }
  if (model == Model::kRevised) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < m; ++k) {
          if (i == j) continue;
          if (v.Y(i, k) + v.Y(j, k) > 1 + precedes(inst, i, j) + precedes(inst, j, i))
            return false;
        }
  }
  const double cap = inst.capacity ? *inst.capacity
                                   : std::numeric_limits<double>::infinity();
  std::vector<double> events(inst.arrival);
  events.insert(events.end(), inst.departure.begin(), inst.departure.end());
  for (double tr : events) {
    double load = 0.0;
    for (const auto& x : transfers) {
      if (inst.arrival[x.i] <= tr) load += inst.flow(x.i, x.j);
      if (inst.departure[x.j] <= tr) load -= inst.flow(x.i, x.j);
    }
    if (load > cap + 1e-9) return false;
  }
  return true;
}

inline double objective(const Instance& inst, const std::vector<Transfer>& transfers) {
  double total = 0.0;
  for (const auto& x : transfers)
    total += inst.transfer_cost(x.k, x.l) * inst.transfer_time(x.k, x.l);
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      int served = 0;
      for (const auto& x : transfers) served += (x.i == i && x.j == j);
      total += inst.penalty(i, j) * inst.flow(i, j) * (1 - served);
    }
  return total;
}

/// Minimum over every dock vector and every subset of transfers between
/// docked trucks.
inline double optimum(const Instance& inst, Model model) {
  const int n = inst.n, m = inst.m;
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> dock(n, -1);
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= (m + 1);
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t c = code;
    for (int i = 0; i < n; ++i) {
      dock[i] = static_cast<int>(c % (m + 1)) - 1;
      c /= (m + 1);
    }
    std::vector<Transfer> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && dock[i] >= 0 && dock[j] >= 0) pairs.push_back({i, j, dock[i], dock[j]});
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Transfer> chosen;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mask & (1u << p)) chosen.push_back(pairs[p]);
      if (!feasible(inst, dock, chosen, model)) continue;
      const double obj = objective(inst, chosen);
      if (obj < best) best = obj;
    }
  }
  return best;
}

/// Instance used by the oracle sweeps: n in {2, 3, 4}, m in {1, 2}.
inline Instance sweep_instance(std::uint64_t seed, std::optional<double> capacity_ratio) {
  crossdock::GeneratorParams p;
  p.seed = seed;
  p.n = 2 + static_cast<int>(seed % 3);
  p.m = 1 + static_cast<int>((seed / 3) % 2);
  p.flow_density = 1.0;
  p.capacity_ratio = capacity_ratio;
  return crossdock::generate(p);
}

}  // namespace oracle
