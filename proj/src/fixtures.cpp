#include "crossdock/fixtures.hpp"

namespace crossdock::fixtures {

namespace {

Matrix Scaled(const std::vector<std::vector<double>>& rows, double factor) {
  Matrix out = Matrix::FromRows(rows);
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= factor;
  return out;
}

}  // namespace

Instance miao_example_as_printed() {
  const std::vector<std::vector<double>> dock_table = {
      {0, 1, 2, 3, 4, 5}, {1, 0, 1, 4, 3, 4}, {2, 1, 0, 5, 4, 3},
      {3, 4, 5, 0, 1, 2}, {4, 3, 4, 1, 0, 1}, {5, 4, 3, 2, 1, 0},
  };
  const std::vector<std::vector<double>> truck_table = {
      {19, 13, 19, 14, 12, 13, 16, 12, 14}, {19, 18, 16, 17, 18, 14, 12, 14, 16},
      {18, 17, 15, 20, 13, 13, 17, 15, 17}, {10, 11, 10, 10, 19, 19, 16, 20, 14},
      {19, 20, 19, 19, 12, 18, 20, 10, 15}, {20, 17, 12, 15, 14, 20, 20, 17, 10},
      {18, 14, 13, 10, 19, 20, 15, 19, 18}, {15, 11, 20, 20, 14, 12, 18, 13, 10},
      {17, 10, 12, 10, 18, 13, 18, 20, 20},
  };
  Instance inst;
  inst.name = "miao_example";
  inst.n = 9;
  inst.m = 6;
  inst.arrival = {15.42, 15.50, 17.00, 16.52, 16.41, 16.08, 16.52, 16.28, 16.29};
  inst.departure = {16.41, 16.41, 18.00, 17.57, 17.46, 17.10, 18.05, 17.34, 17.42};
  inst.transfer_time = Matrix::FromRows(dock_table);
  inst.transfer_cost = Matrix::FromRows(dock_table);
  inst.flow = Scaled(truck_table, 10.0);
  inst.penalty = Scaled(truck_table, 10.0);
  return inst;
}

Instance miao_example() { return zero_unreachable_flows(miao_example_as_printed()); }

Solution s_star() {
  Solution sol = Solution::Empty(9);
  sol.dock[0] = 0;
  sol.dock[2] = 1;
  sol.dock[6] = 2;
  // z_1312, z_1713, z_3121, z_3723, z_7131, z_7332
  sol.transfers = {{0, 2, 0, 1}, {0, 6, 0, 2}, {2, 0, 1, 0},
                   {2, 6, 1, 2}, {6, 0, 2, 0}, {6, 2, 2, 1}};
  return sol;
}

Solution s_prime_star() {
  Solution sol = Solution::Empty(9);
  sol.dock[0] = 0;
  sol.dock[1] = 1;
  sol.dock[2] = 0;
  sol.dock[3] = 1;
  // z_1311, z_1412, z_2321, z_2422, z_4321
  sol.transfers = {{0, 2, 0, 0}, {0, 3, 0, 1}, {1, 2, 1, 0}, {1, 3, 1, 1}, {3, 2, 1, 0}};
  return sol;
}

}  // namespace crossdock::fixtures
