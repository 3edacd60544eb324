#pragma once

// CPLEX-style LP text for either formulation, for cross-checking optima with
// an external MILP solver.
//
// Layout: a comment header (model, formulation, self-flow mode, objective
// constant, counts), then Minimize / Subject To / Bounds / Binaries / End.
// Variables are y_i_k and z_i_j_k_l with 1-based indices. The objective is
// the linearised sum of (c_kl t_kl - p_ij f_ij) z_ijkl, one term per line; the
// constant sum of p_ij f_ij is carried only in the header because LP dialects
// disagree on objective constants. Time-feasibility rows become fixings
// "z = 0" in Bounds. Numbers use 17 significant digits.

#include <string>

#include "crossdock/formulations.hpp"
#include "crossdock/model.hpp"

namespace crossdock {

struct LpDocument {
  std::string text;
  double objective_constant = 0.0;
  int variable_count = 0;
  int y_variable_count = 0;
  int z_variable_count = 0;
  int constraint_count = 0;  // rows under Subject To
  int fixed_count = 0;       // z = 0 fixings under Bounds
};

LpDocument emit_lp(const Instance& inst, Formulation form);

/// "<instance>__<formulation>.lp"
std::string lp_file_name(const Instance& inst, Formulation form);

}  // namespace crossdock
