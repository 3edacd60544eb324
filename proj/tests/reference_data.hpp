#pragma once

// Published 9-truck / 6-dock example typed in from the printed tables,
// independently of the library fixtures. All indices 1-based.

#include <array>
#include <utility>
#include <vector>

namespace refdata {

inline constexpr int kTrucks = 9;
inline constexpr int kDocks = 6;

// t_kl = c_kl
inline constexpr int kDockTable[6][6] = {
    {0, 1, 2, 3, 4, 5}, {1, 0, 1, 4, 3, 4}, {2, 1, 0, 5, 4, 3},
    {3, 4, 5, 0, 1, 2}, {4, 3, 4, 1, 0, 1}, {5, 4, 3, 2, 1, 0},
};

// p_ij = f_ij = 10 x entry
inline constexpr int kTruckTable[9][9] = {
    {19, 13, 19, 14, 12, 13, 16, 12, 14}, {19, 18, 16, 17, 18, 14, 12, 14, 16},
    {18, 17, 15, 20, 13, 13, 17, 15, 17}, {10, 11, 10, 10, 19, 19, 16, 20, 14},
    {19, 20, 19, 19, 12, 18, 20, 10, 15}, {20, 17, 12, 15, 14, 20, 20, 17, 10},
    {18, 14, 13, 10, 19, 20, 15, 19, 18}, {15, 11, 20, 20, 14, 12, 18, 13, 10},
    {17, 10, 12, 10, 18, 13, 18, 20, 20},
};

inline constexpr double kArrival[9] = {15.42, 15.50, 17.00, 16.52, 16.41,
                                       16.08, 16.52, 16.28, 16.29};
inline constexpr double kDeparture[9] = {16.41, 16.41, 18.00, 17.57, 17.46,
                                         17.10, 18.05, 17.34, 17.42};

inline const std::vector<std::pair<int, int>> kXhatOnes = {
    {1, 3}, {1, 4}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 7}};

// s*: y_11, y_32, y_73 and z_1312, z_1713, z_3121, z_3723, z_7131, z_7332
inline const std::vector<std::pair<int, int>> kSStarDocks = {{1, 1}, {3, 2}, {7, 3}};
inline const std::vector<std::array<int, 4>> kSStarTransfers = {
    {1, 3, 1, 2}, {1, 7, 1, 3}, {3, 1, 2, 1}, {3, 7, 2, 3}, {7, 1, 3, 1}, {7, 3, 3, 2}};

// s'*: y_11, y_22, y_31, y_42 and z_1311, z_1412, z_2321, z_2422, z_4321
inline const std::vector<std::pair<int, int>> kSPrimeDocks = {{1, 1}, {2, 2}, {3, 1}, {4, 2}};
inline const std::vector<std::array<int, 4>> kSPrimeTransfers = {
    {1, 3, 1, 1}, {1, 4, 1, 2}, {2, 3, 2, 1}, {2, 4, 2, 2}, {4, 3, 2, 1}};

inline constexpr double kReportedCrossDock = 316951.0;
inline constexpr double kReportedRCrossDock = 11.0;
inline constexpr double kReportedGapPercent = 45.45;

}  // namespace refdata
