#pragma once

// Infeasibility explanation for a fixed dock assignment.

#include <optional>
#include <string>
#include <vector>

#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

struct ConflictSet {
  std::vector<ConstraintId> constraints;
  /// Every single-member removal was re-checked and found satisfiable.
  bool minimal = false;
  std::string narrative;
};

/// With y fixed, decides whether any z satisfies the instantiated constraints
/// in `rows` (z pushed up by pair forcing, down by linking, time and same-dock
/// rows, buffer load checked at the lowest z). Exposed so callers can re-check
/// a conflict set independently.
bool rows_satisfiable(const Instance& inst, const std::vector<int>& dock,
                      Formulation form, const std::vector<ConstraintId>& rows);

/// Constraint instances that can take part in a conflict for this assignment:
/// rows that force some z to a value, linking rows on forced variables and
/// every capacity row. Other rows never change satisfiability.
std::vector<ConstraintId> active_rows(const Instance& inst, const std::vector<int>& dock,
                                      Formulation form);

/// Deletion filter over individual constraint instances. Returns nullopt when
/// the assignment admits a feasible z. Among several conflicts the one with
/// the lexicographically smallest index tuples survives.
std::optional<ConflictSet> find_conflict(const Instance& inst, const std::vector<int>& dock,
                                         Formulation form);

enum class PairAnomaly {
  kNone,
  kPhantomTransfer,     // f_ij = 0, yet z_ijkl is forced to 1 and charged
  kEliminatedTransfer,  // positive flow, j still present at i's arrival, but
                        // the pair can never be docked at (k, l)
};

struct PairExplanation {
  PairAnomaly anomaly = PairAnomaly::kNone;
  std::string text;
};

/// Classifies how the pair-forcing rows mistreat transfer (i, j, k, l).
/// R-CROSS-DOCK never exhibits either anomaly.
PairExplanation explain_pair(const Instance& inst, int i, int j, int k, int l,
                             Formulation form);

}  // namespace crossdock
