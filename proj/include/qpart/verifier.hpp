#pragma once

// Registry of machine-checked statements. Each task walks a parameter grid,
// compares both sides of an identity cell by cell and stops at the first
// mismatch, which it reports together with CLI commands that reproduce the
// two values.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpart {

enum class TaskId { T1, T2, T3, T3x, T4, T5, T6, T7, T7c, T8, T9, T10, T11, T12 };

// How class counts are obtained. Both computes each count twice and treats
// any disagreement between the paths as a failure.
enum class VerifyMethod { Enumeration, Series, Both };

struct TaskInfo {
  TaskId id;
  std::string_view name;       // "T1"
  std::string_view statement;  // one-line description of the identity
};

std::span<const TaskInfo> all_tasks();
std::string_view task_name(TaskId id);
std::optional<TaskId> parse_task_id(std::string_view name);
std::string_view verify_method_name(VerifyMethod m);
std::optional<VerifyMethod> parse_verify_method(std::string_view name);

// Unset fields keep the task's default grid. An explicit nmin makes every
// cell from nmin upward asserted, even below a stated threshold.
struct TaskOverrides {
  std::optional<int> kmin, kmax;
  std::optional<int> nmin, nmax;
  std::optional<int> order;
  std::optional<int> big_n_max;  // N range of the finite identity (T8)
  std::optional<VerifyMethod> method;
  // In Both mode, enumeration is skipped above this weight.
  std::optional<int> enumeration_limit;
};

struct Witness {
  std::string cell;
  std::string lhs_label;
  std::int64_t lhs = 0;
  std::string rhs_label;
  std::int64_t rhs = 0;
  std::vector<std::string> replay;
};

struct VerificationReport {
  TaskId id;
  std::string statement;
  std::string method;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = true;
  std::int64_t checked_cells = 0;
  std::int64_t informational_cells = 0;
  std::optional<Witness> witness;
  std::optional<std::string> error;
  std::vector<std::string> notes;
  double wall_time_s = 0.0;
};

VerificationReport run_task(TaskId id, const TaskOverrides& overrides = {});

// Every registered task once, in registry order. Tasks run concurrently
// when parallel is set; the result order does not depend on it.
std::vector<VerificationReport> run_all(const TaskOverrides& overrides = {}, bool parallel = true);

// 2^{k-1} k (2k-1)
int chain_threshold(int k);

}  // namespace qpart
