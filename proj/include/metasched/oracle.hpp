#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "metasched/model.hpp"

// Exact references for small instances. Nothing here calls into the cpm,
// rcpsp, tctp or search modules; agreement tests rely on that.
namespace metasched::oracle {

class GuardExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleGuard {
  std::size_t max_activities = 10;
  std::uint64_t max_states = 10'000'000;
};

/// Longest duration-weighted chain. `durations` is indexed by network
/// position. Throws ModelError on a cycle.
int longest_path_makespan(const ProjectNetwork& net, std::span<const int> durations);
inline int longest_path_makespan(const ProjectNetwork& net) { return longest_path_makespan(net, net.durations()); }

struct FrontPoint {
  int duration = 0;
  Money direct_cost = 0;
  /// Lexicographically smallest option vector attaining the point.
  std::vector<int> modes;
  friend bool operator==(const FrontPoint&, const FrontPoint&) = default;
};

struct ExactTctp {
  /// Non-dominated (duration, direct cost), duration ascending.
  std::vector<FrontPoint> front;
  std::uint64_t combinations = 0;
  /// Present when an indirect cost was supplied.
  std::optional<Money> min_total_cost;
  std::optional<int> min_total_duration;
  std::vector<int> min_total_modes;
};

/// Full enumeration of option combinations.
ExactTctp exhaustive_tctp(const TctpInstance& instance, const OracleGuard& guard = {},
                          std::optional<Money> indirect_per_day = std::nullopt);

/// Straight-line serial SGS: earliest start after predecessors, stepping
/// by one time unit until the whole duration fits under `capacity`.
std::map<ActivityId, int> reference_serial_sgs(const ProjectNetwork& net, int capacity,
                                              std::span<const ActivityId> list);

struct ExactRcpsp {
  int makespan = 0;
  std::vector<ActivityId> best_list;
  std::uint64_t states_explored = 0;
};

/// Depth-first enumeration of precedence-feasible lists with the serial
/// rule applied incrementally. Partial schedules already seen are skipped,
/// and branches whose partial makespan reaches the incumbent are cut.
ExactRcpsp exhaustive_rcpsp(const ProjectNetwork& net, int capacity, const OracleGuard& guard = {});

}  // namespace metasched::oracle
