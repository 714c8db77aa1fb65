#pragma once

#include <span>
#include <vector>

#include "metasched/model.hpp"

namespace metasched::cpm {

struct EarlyTimes {
  int start = 0;
  int finish = 0;
  friend bool operator==(const EarlyTimes&, const EarlyTimes&) = default;
};

struct LateTimes {
  int start = 0;
  int finish = 0;
  friend bool operator==(const LateTimes&, const LateTimes&) = default;
};

struct ActivityTimes {
  ActivityId id = 0;
  int duration = 0;
  int early_start = 0;
  int early_finish = 0;
  int late_start = 0;
  int late_finish = 0;
  int total_float = 0;

  [[nodiscard]] bool critical() const noexcept { return total_float == 0; }
  friend bool operator==(const ActivityTimes&, const ActivityTimes&) = default;
};

struct CpmResult {
  /// One record per activity, in network order.
  std::vector<ActivityTimes> activities;
  int makespan = 0;
  /// Ids with zero total float, ascending.
  std::vector<ActivityId> critical;

  [[nodiscard]] const ActivityTimes& at(ActivityId id) const;
};

// Durations are indexed by network position; a size mismatch is a missing
// duration and throws ModelError.
std::vector<EarlyTimes> forward_pass(const ProjectNetwork& net, std::span<const int> durations);
std::vector<LateTimes> backward_pass(const ProjectNetwork& net, std::span<const int> durations, int makespan);

CpmResult compute_cpm(const ProjectNetwork& net, std::span<const int> durations);
inline CpmResult compute_cpm(const ProjectNetwork& net) { return compute_cpm(net, net.durations()); }

/// Makespan alone, without the backward pass.
int makespan(const ProjectNetwork& net, std::span<const int> durations);

int makespan_for_modes(const TctpInstance& instance, const ModeVector& modes);

}  // namespace metasched::cpm
