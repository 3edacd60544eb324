#pragma once

#include <vector>

#include "crossdock/model.hpp"
#include "reference_data.hpp"

namespace testing_support {

using crossdock::Instance;
using crossdock::Matrix;
using crossdock::Solution;

/// Builds the 9-truck example from the typed-in tables. Flows towards a
/// truck that has left before the sender arrives are dropped.
inline Instance reference_instance() {
  Instance inst;
  inst.n = refdata::kTrucks;
  inst.m = refdata::kDocks;
  inst.arrival.assign(refdata::kArrival, refdata::kArrival + refdata::kTrucks);
  inst.departure.assign(refdata::kDeparture, refdata::kDeparture + refdata::kTrucks);
  inst.transfer_time = Matrix(6, 6);
  inst.transfer_cost = Matrix(6, 6);
  for (int k = 0; k < 6; ++k)
    for (int l = 0; l < 6; ++l)
      inst.transfer_time(k, l) = inst.transfer_cost(k, l) = refdata::kDockTable[k][l];
  inst.flow = Matrix(9, 9);
  inst.penalty = Matrix(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      inst.penalty(i, j) = 10.0 * refdata::kTruckTable[i][j];
      if (refdata::kDeparture[j] >= refdata::kArrival[i])
        inst.flow(i, j) = 10.0 * refdata::kTruckTable[i][j];
    }
  inst.name = "miao_example";
  return inst;
}

inline Solution reference_solution(const std::vector<std::pair<int, int>>& docks,
                                   const std::vector<std::array<int, 4>>& transfers) {
  Solution sol = Solution::Empty(refdata::kTrucks);
  for (const auto& [i, k] : docks) sol.dock[i - 1] = k - 1;
  for (const auto& t : transfers) sol.transfers.push_back({t[0] - 1, t[1] - 1, t[2] - 1, t[3] - 1});
  return sol;
}

inline Solution reference_s_star() {
  return reference_solution(refdata::kSStarDocks, refdata::kSStarTransfers);
}

inline Solution reference_s_prime() {
  return reference_solution(refdata::kSPrimeDocks, refdata::kSPrimeTransfers);
}

/// n = 2, m = 1, f_12 = 5, p_12 = 2, everything else zero; windows [0, 1]
/// and [2, 3] so truck 1 leaves before truck 2 arrives.
inline Instance tiny_instance() {
  Instance inst;
  inst.n = 2;
  inst.m = 1;
  inst.arrival = {0.0, 2.0};
  inst.departure = {1.0, 3.0};
  inst.transfer_time = Matrix(1, 1);
  inst.transfer_cost = Matrix(1, 1);
  inst.flow = Matrix(2, 2);
  inst.penalty = Matrix(2, 2);
  inst.flow(0, 1) = 5.0;
  inst.penalty(0, 1) = 2.0;
  return inst;
}

/// Instance with n trucks on m docks, windows given, everything else zero.
inline Instance blank_instance(int m, std::vector<double> arrival, std::vector<double> departure) {
  Instance inst;
  inst.n = static_cast<int>(arrival.size());
  inst.m = m;
  inst.arrival = std::move(arrival);
  inst.departure = std::move(departure);
  inst.transfer_time = Matrix(m, m);
  inst.transfer_cost = Matrix(m, m);
  inst.flow = Matrix(inst.n, inst.n);
  inst.penalty = Matrix(inst.n, inst.n);
  return inst;
}

}  // namespace testing_support
