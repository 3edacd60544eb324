#pragma once

// Objective evaluation and per-constraint residual checks for the two models:
// the original CROSS-DOCK formulation and the rectified R-CROSS-DOCK one.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crossdock/model.hpp"

namespace crossdock {

enum class Formulation { kCrossDock, kRCrossDock };

/// "crossdock" or "r-crossdock".
std::string_view to_string(Formulation form);
std::optional<Formulation> parse_formulation(std::string_view text);

enum class Family {
  kDockUniqueness,   // sum_k y_ik <= 1
  kLinkZYi,          // z_ijkl <= y_ik
  kLinkZYj,          // z_ijkl <= y_jl
  kPairForcing,      // y_ik + y_jl - 1 <= z_ijkl             (CROSS-DOCK only)
  kSameDockTW,       // z_ijkk <= xhat_ij (+ xhat_ji in CROSS-DOCK)
  kCapacity,         // buffer load at event time t_r <= C
  kTimeFeasibility,  // transfer fits between a_i and d_j
  kDockConflict,     // y_ik + y_jk <= 1 + xhat_ij + xhat_ji  (R-CROSS-DOCK only)
};

std::string_view to_string(Family family);
bool applies_to(Family family, Formulation form);

/// One instantiated constraint. Indices are 0-based (i, j, k, l), (i, j, k)
/// or (r) depending on the family; ToString renders them 1-based.
struct ConstraintId {
  Family family;
  std::vector<int> indices;

  std::string ToString() const;
  auto operator<=>(const ConstraintId&) const = default;
  bool operator==(const ConstraintId&) const = default;
};

struct Violation {
  ConstraintId id;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string explanation;
};

struct ViolationReport {
  std::vector<Violation> violations;  // sorted by (family, indices)

  bool feasible() const { return violations.empty(); }
  bool contains(const ConstraintId& id) const;
};

/// Signed amount by which a constraint is exceeded (positive leans towards
/// violation) plus the exact violation verdict, which for strict
/// inequalities can differ from value > 0 at the boundary.
struct Residual {
  double value = 0.0;
  bool violated = false;
};

class UnlinkedTransfer : public Error {
 public:
  explicit UnlinkedTransfer(const Transfer& t);
  Transfer transfer;
};

/// Cost of the selected transfers plus penalties for every modelled pair left
/// without one. Sums run in canonical order, so the result does not depend
/// on the order of sol.transfers. Throws UnlinkedTransfer when a transfer
/// names docks that disagree with sol.dock.
ObjectiveBreakdown objective_value(const Instance& inst, const Solution& sol,
                                   Formulation form);

/// Every violated constraint instance, not just the first.
ViolationReport check_solution(const Instance& inst, const Solution& sol,
                               Formulation form);

/// y_ik + y_jl - 1 - z_ijkl. Throws Error when called for R-CROSS-DOCK, which
/// has no such constraint.
Residual residual_pair_forcing(const Instance& inst, const Solution& sol, int i, int j,
                               int k, int l, Formulation form = Formulation::kCrossDock);

/// CROSS-DOCK: f_ij z (d_j - a_i - t_kl) >= 0, violated when the margin is
/// negative. R-CROSS-DOCK: z fixed to 0 whenever the margin is <= 0.
Residual residual_time_feasibility(const Instance& inst, const Solution& sol, int i,
                                   int j, int k, int l, Formulation form);

/// z_ijkk against xhat_ij + xhat_ji (CROSS-DOCK) or xhat_ij (R-CROSS-DOCK).
Residual residual_same_dock(const Instance& inst, const Solution& sol, int i, int j,
                            int k, Formulation form);

/// y_ik + y_jk - 1 - xhat_ij - xhat_ji.
Residual residual_dock_conflict(const Instance& inst, const Solution& sol, int i, int j,
                                int k);

/// Buffer load at event time t_r minus C; r is 0-based into event_times().
Residual residual_capacity(const Instance& inst, const Solution& sol, int r);

/// Contribution of one transfer i -> j to the buffer load at time t:
/// f_ij * ([a_i <= t] - [d_j <= t]).
double capacity_weight(const Instance& inst, int i, int j, double t);

}  // namespace crossdock
