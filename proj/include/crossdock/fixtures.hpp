#pragma once

// The published 9-truck / 6-dock example and the two solutions listed with it.

#include "crossdock/model.hpp"

namespace crossdock::fixtures {

/// Figures printed alongside the example. Reports show them next to the
/// computed values; nothing asserts equality with them.
inline constexpr double kReportedCrossDockObjective = 316951.0;
inline constexpr double kReportedRCrossDockObjective = 11.0;
inline constexpr double kReportedRelativeGapPercent = 45.45;

/// Data exactly as printed: c = t, p = f = 10 x the 9x9 table, capacity
/// unstated (left unbounded). Six printed flows run to a truck that has
/// already left, so this instance does not validate.
Instance miao_example_as_printed();

/// The printed data with those six flows set to zero, which is what the model
/// assumes for them. This is the bundled fixture.
Instance miao_example();

/// CROSS-DOCK optimum as listed: trucks 1, 3, 7 on docks 1, 2, 3.
Solution s_star();

/// R-CROSS-DOCK solution as listed: trucks 1, 2, 3, 4 on docks 1, 2, 1, 2.
Solution s_prime_star();

}  // namespace crossdock::fixtures
