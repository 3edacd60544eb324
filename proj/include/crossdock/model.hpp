#pragma once

// Instance data, derived precedence/timeline quantities and the solution
// representation shared by every solver in the toolkit.
//
// Indices are 0-based in memory. Anything rendered for a user (reports, file
// formats, LP variable names) is 1-based.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossdock {

/// Absolute tolerance for every <=, >= and == 0 test on times and costs.
inline constexpr double kEps = 1e-9;

inline constexpr int kUnassigned = -1;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// How flows f_ii from a truck to itself are treated.
///
/// kExcluded drops the diagonal from the objective and from the transfer
/// variables. kLiteral keeps p_ii * f_ii in the penalty and admits diagonal
/// transfers (i, i, k, l), constrained only by the families whose
/// quantifiers do not exclude i == j.
enum class SelfFlows { kExcluded, kLiteral };

struct Instance {
  int n = 0;  // trucks
  int m = 0;  // docks
  std::vector<double> arrival;
  std::vector<double> departure;
  Matrix transfer_time;  // m x m
  Matrix transfer_cost;  // m x m, cost per unit time
  Matrix flow;           // n x n, pallets i -> j
  Matrix penalty;        // n x n, cost per unfulfilled pallet
  std::optional<double> capacity;  // nullopt: unbounded
  SelfFlows self_flows = SelfFlows::kExcluded;

  std::string name;
  std::optional<std::uint64_t> seed;

  bool includes_pair(int i, int j) const {
    return i != j || self_flows == SelfFlows::kLiteral;
  }

  /// C, or for an unbounded instance a value no load can exceed.
  double effective_capacity() const;

  bool operator==(const Instance&) const = default;
};

enum class InstanceErrorKind {
  kShapeMismatch,
  kNonPositiveCount,
  kWindowInverted,
  kFlowVsTime,
  kNegativeValue,
  kNonPositiveCapacity,
  kNotFinite,
};

struct InstanceError {
  InstanceErrorKind kind;
  std::string field;
  std::vector<int> indices;  // 0-based

  /// e.g. "window_inverted(1)" with 1-based indices.
  std::string ToString() const;
};

struct Validation {
  std::vector<InstanceError> errors;
  bool over_constrained = false;  // n > m; informational

  bool ok() const { return errors.empty(); }
};

Validation validate_instance(const Instance& inst);

/// Sets f_ij = 0 wherever truck j departs before truck i arrives, the pairs
/// that would otherwise fail flow_vs_time.
Instance zero_unreachable_flows(Instance inst);

/// Throws InvalidInstance when validate_instance reports errors.
void require_valid(const Instance& inst);

class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(std::vector<InstanceError> errors);
  const std::vector<InstanceError>& errors() const { return errors_; }

 private:
  std::vector<InstanceError> errors_;
};

/// xhat(i, j) == 1 iff truck i departs no later than truck j arrives.
class Precedence {
 public:
  explicit Precedence(const Instance& inst);

  bool operator()(int i, int j) const { return bits_[i * n_ + j] != 0; }
  int size() const { return n_; }

  /// Windows of i and j intersect: neither precedes the other.
  bool overlap(int i, int j) const { return !(*this)(i, j) && !(*this)(j, i); }

 private:
  int n_;
  std::vector<char> bits_;
};

inline Precedence compute_xhat(const Instance& inst) { return Precedence(inst); }

/// The 2n arrival and departure instants, ascending, duplicates kept.
std::vector<double> event_times(const Instance& inst);

/// Sum of p_ij * f_ij over the modelled pairs: what is paid when nothing moves.
double total_penalty_constant(const Instance& inst);

/// d_j - a_i - t_kl: slack of a transfer from truck i at dock k to truck j at
/// dock l.
inline double time_margin(const Instance& inst, int i, int j, int k, int l) {
  return inst.departure[j] - inst.arrival[i] - inst.transfer_time(k, l);
}

struct Transfer {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;

  auto operator<=>(const Transfer&) const = default;
};

/// Dock assignment y (dock[i] == kUnassigned when truck i is not docked) plus
/// the selected transfers z.
struct Solution {
  std::vector<int> dock;
  std::vector<Transfer> transfers;

  static Solution Empty(int n) { return Solution{std::vector<int>(n, kUnassigned), {}}; }

  bool docked(int i) const { return dock[i] != kUnassigned; }
  bool has_transfer(const Transfer& t) const;

  /// Transfers sorted by (i, j, k, l).
  std::vector<Transfer> sorted_transfers() const;

  bool operator==(const Solution&) const = default;
};

/// Throws Error when dock entries are out of range, a transfer index is out of
/// range, a diagonal transfer appears outside kLiteral mode, or an ordered
/// pair carries more than one (k, l).
void check_structure(const Instance& inst, const Solution& sol);

struct ObjectiveBreakdown {
  double transfer_cost_total = 0.0;
  double penalty_total = 0.0;
  double total = 0.0;
  int fulfilled_pairs = 0;
};

}  // namespace crossdock
