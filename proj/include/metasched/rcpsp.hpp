#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "metasched/model.hpp"

namespace metasched::rcpsp {

/// Precedence-feasible permutation of every activity id.
using ActivityList = std::vector<ActivityId>;

struct Schedule {
  std::map<ActivityId, int> start_times;
  int makespan = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

struct ResourceProfile {
  /// usage[t] for t in [0, makespan).
  std::vector<int> usage;

  [[nodiscard]] int peak() const noexcept;
  friend bool operator==(const ResourceProfile&, const ResourceProfile&) = default;
};

struct ScheduleViolation {
  enum class Kind { MissingActivity, NegativeStart, Precedence, Capacity, Makespan };
  Kind kind;
  ActivityId activity = 0;
  ActivityId predecessor = 0;
  int time = 0;
  std::string message;
};

bool is_precedence_feasible(const ProjectNetwork& net, std::span<const ActivityId> list);

/// Throws ModelError unless `list` is a precedence-feasible permutation.
void require_feasible_list(const ProjectNetwork& net, std::span<const ActivityId> list);

/// Throws ModelError("capacity below maximum activity demand") when the
/// capacity cannot host the largest single demand.
void require_capacity(const ProjectNetwork& net, int capacity);

/// Serial schedule generation: activities are placed in list order at the
/// earliest integer time at or after their predecessors' finishes where
/// the whole duration fits under `capacity`.
///
/// Precomputes per-network data for repeated decodes. Stateless between
/// calls, so one instance may be shared by concurrent searches.
class SerialDecoder {
public:
  SerialDecoder(const ProjectNetwork& net, int capacity);

  /// Positional decode: `order` holds network indices. Returns start times
  /// indexed by network position. Does not validate `order`.
  int decode(std::span<const std::size_t> order, std::span<const int> durations, std::vector<int>& starts) const;
  int decode(std::span<const std::size_t> order, std::vector<int>& starts) const {
    return decode(order, durations_, starts);
  }

  [[nodiscard]] const ProjectNetwork& network() const noexcept { return *net_; }
  [[nodiscard]] int capacity() const noexcept { return capacity_; }
  [[nodiscard]] std::vector<std::size_t> to_indices(std::span<const ActivityId> list) const;

private:
  const ProjectNetwork* net_;
  int capacity_;
  std::vector<int> durations_;
  std::vector<int> demands_;
};

Schedule serial_sgs(const ProjectNetwork& net, int capacity, std::span<const ActivityId> list);

ResourceProfile resource_profile(const ProjectNetwork& net, const Schedule& schedule);

std::vector<ScheduleViolation> check_schedule(const ProjectNetwork& net, const Schedule& schedule, int capacity);

/// Activities whose duration increased by one unit, re-decoded with the
/// same list, strictly increases the makespan.
std::vector<ActivityId> constrained_critical(const ProjectNetwork& net, int capacity,
                                             std::span<const ActivityId> list);

/// Early-start schedule (capacity ignored).
Schedule early_start_schedule(const ProjectNetwork& net);

/// Ids in network topological order.
ActivityList topological_list(const ProjectNetwork& net);

}  // namespace metasched::rcpsp
