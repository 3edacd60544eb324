#pragma once

// Transfer selection for a fixed dock assignment: the inner step of every
// solver. In CROSS-DOCK the assignment determines the transfers outright; in
// R-CROSS-DOCK the transfers are a free choice, made here to maximise the
// saved penalty minus the transfer cost under the buffer capacity.

#include <optional>
#include <vector>

#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

/// Candidate sets larger than this fall back to the greedy selection when the
/// capacity binds (kAuto policy only).
inline constexpr int kExactSelectionLimit = 20;

enum class SelectionPolicy { kAuto, kExact };

struct CandidatePair {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;
  double gain = 0.0;  // p_ij f_ij - c_kl t_kl
  bool feasible = false;
};

/// Ordered pairs of docked trucks with positive flow, in (i, j) order, with
/// their gain and whether the formulation's time and same-dock rules admit
/// the transfer.
std::vector<CandidatePair> candidate_pairs(const Instance& inst,
                                           const std::vector<int>& dock,
                                           Formulation form);

struct InducedTransfers {
  Solution solution;
  /// Empty iff a feasible z exists; otherwise the first contradiction found,
  /// e.g. {PairForcing(i,j,k,l), TimeFeasibility(i,j,k,l)}.
  std::vector<ConstraintId> witness;
  bool exact = true;

  bool feasible() const { return witness.empty(); }
};

/// z_ijkl = 1 exactly for every ordered pair of docked trucks. In literal
/// self-flow mode the unconstrained diagonal transfers are chosen optimally.
InducedTransfers induced_transfers_crossdock(const Instance& inst,
                                             const std::vector<int>& dock,
                                             SelectionPolicy policy = SelectionPolicy::kAuto);

struct TransferSelection {
  Solution solution;
  double gain = 0.0;
  bool exact = true;
};

class DockConflictError : public Error {
 public:
  DockConflictError(int i, int j, int k);
  int i, j, k;
};

/// First pair (i < j) of time-overlapping trucks sharing a dock.
std::optional<ConstraintId> first_dock_conflict(const Instance& inst,
                                                const std::vector<int>& dock);

/// Best transfer set for R-CROSS-DOCK. Without a binding capacity this is the
/// per-pair rule: select iff gain > 0. With a binding capacity the subset is
/// found by exact search (up to kExactSelectionLimit candidates under kAuto,
/// always under kExact), else greedily by gain per unit of peak load, in
/// which case exact is false. Equal-gain subsets resolve to the
/// lexicographically smallest selection. Throws DockConflictError.
TransferSelection optimal_transfers_rcrossdock(const Instance& inst,
                                               const std::vector<int>& dock,
                                               SelectionPolicy policy = SelectionPolicy::kAuto);

struct Evaluation {
  bool feasible = false;
  Solution solution;
  ObjectiveBreakdown objective;
  bool exact = true;
  std::vector<ConstraintId> witness;
};

/// Full solution and objective for a dock assignment under either model.
Evaluation evaluate_assignment(const Instance& inst, Formulation form,
                               const std::vector<int>& dock,
                               SelectionPolicy policy = SelectionPolicy::kAuto);

}  // namespace crossdock
