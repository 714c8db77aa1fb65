#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace metasched {

using ActivityId = int;

/// Currency in whole units. All bundled costs are integral.
using Money = std::int64_t;

class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Activity {
  ActivityId id = 0;
  int duration = 0;
  int resource_demand = 1;

  friend bool operator==(const Activity&, const Activity&) = default;
};

/// One activity-on-arrow record. `successor_nodes` is the optional
/// end-node listing used only to cross-check the derived precedence.
struct AoaArc {
  ActivityId activity_id = 0;
  int start_node = 0;
  int end_node = 0;
  int duration = 0;
  int resource_demand = 1;
  std::optional<std::vector<int>> successor_nodes;

  friend bool operator==(const AoaArc&, const AoaArc&) = default;
};

struct Violation {
  enum class Kind { DuplicateId, DanglingReference, SelfLoop, Cycle, NegativeValue, NoSource, NoSink };
  Kind kind;
  std::vector<ActivityId> ids;
  std::string message;
};

std::string to_string(Violation::Kind kind);

/// Activities plus a finish-to-start precedence relation.
///
/// Construction never throws on structural problems; `validate_network`
/// reports them. Algorithms that need a topological order call
/// `topological_order()`, which throws `ModelError` on a cyclic or
/// dangling relation.
class ProjectNetwork {
public:
  ProjectNetwork() = default;
  ProjectNetwork(std::vector<Activity> activities,
                 std::map<ActivityId, std::vector<ActivityId>> predecessors);

  [[nodiscard]] std::size_t size() const noexcept { return activities_.size(); }
  [[nodiscard]] bool empty() const noexcept { return activities_.empty(); }
  [[nodiscard]] const std::vector<Activity>& activities() const noexcept { return activities_; }
  [[nodiscard]] const Activity& activity(std::size_t index) const { return activities_.at(index); }
  [[nodiscard]] bool contains(ActivityId id) const noexcept;
  [[nodiscard]] std::size_t index_of(ActivityId id) const;

  /// Sorted predecessor ids, exactly as supplied (may include dangling ids).
  [[nodiscard]] const std::vector<ActivityId>& predecessors(ActivityId id) const;
  [[nodiscard]] std::vector<ActivityId> successors(ActivityId id) const;

  /// Resolved predecessor/successor indices (dangling references dropped).
  [[nodiscard]] const std::vector<std::size_t>& predecessor_indices(std::size_t index) const {
    return pred_index_.at(index);
  }
  [[nodiscard]] const std::vector<std::size_t>& successor_indices(std::size_t index) const {
    return succ_index_.at(index);
  }

  [[nodiscard]] bool is_acyclic() const noexcept { return acyclic_; }
  [[nodiscard]] const std::vector<std::size_t>& topological_order() const;

  [[nodiscard]] std::vector<int> durations() const;
  [[nodiscard]] std::vector<int> demands() const;
  [[nodiscard]] int max_demand() const noexcept;
  [[nodiscard]] long long total_demand() const noexcept;

  /// Sub-network induced by `ids`; precedence edges between kept activities
  /// are preserved, edges to dropped activities vanish.
  [[nodiscard]] ProjectNetwork induced(std::span<const ActivityId> ids) const;

  /// Same structure, durations replaced (indexed by activity position).
  [[nodiscard]] ProjectNetwork with_durations(std::span<const int> durations) const;

  friend bool operator==(const ProjectNetwork& a, const ProjectNetwork& b) {
    return a.activities_ == b.activities_ && a.preds_ == b.preds_;
  }

private:
  std::vector<Activity> activities_;
  std::vector<std::vector<ActivityId>> preds_;
  std::vector<std::vector<std::size_t>> pred_index_;
  std::vector<std::vector<std::size_t>> succ_index_;
  std::map<ActivityId, std::size_t> index_;
  std::vector<std::size_t> topo_;
  bool acyclic_ = true;
};

std::vector<Violation> validate_network(const ProjectNetwork& net);

/// Activity j succeeds activity i iff start_node(j) == end_node(i).
/// Throws ModelError on duplicate ids or a cyclic result.
ProjectNetwork derive_precedence_from_nodes(std::span<const AoaArc> arcs);

/// Compares each arc's optional successor-node listing against the
/// end nodes of its derived successors. Returns one warning per mismatch.
std::vector<std::string> check_successor_hints(std::span<const AoaArc> arcs);

struct ActivityOption {
  int duration = 1;
  Money direct_cost = 0;

  friend bool operator==(const ActivityOption&, const ActivityOption&) = default;
};

/// Option index per activity, 1-based, stored in network activity order.
struct ModeVector {
  std::vector<int> choices;

  friend bool operator==(const ModeVector&, const ModeVector&) = default;
  friend auto operator<=>(const ModeVector&, const ModeVector&) = default;
};

class TctpInstance {
public:
  static constexpr std::size_t kMaxOptions = 5;

  TctpInstance() = default;
  TctpInstance(ProjectNetwork network, std::vector<std::vector<ActivityOption>> options,
               std::optional<Money> indirect_cost_per_day);

  [[nodiscard]] const ProjectNetwork& network() const noexcept { return network_; }
  [[nodiscard]] std::size_t size() const noexcept { return network_.size(); }
  [[nodiscard]] const std::vector<ActivityOption>& options(std::size_t index) const {
    return options_.at(index);
  }
  [[nodiscard]] const std::vector<ActivityOption>& options_for(ActivityId id) const;
  [[nodiscard]] std::size_t option_count(std::size_t index) const { return options_.at(index).size(); }

  [[nodiscard]] bool has_indirect_cost() const noexcept { return indirect_.has_value(); }
  /// Throws ModelError("indirect cost required") when unset.
  [[nodiscard]] Money indirect_cost_per_day() const;
  [[nodiscard]] const std::optional<Money>& indirect_cost() const noexcept { return indirect_; }
  [[nodiscard]] TctpInstance with_indirect_cost(Money per_day) const;

  [[nodiscard]] TctpInstance restricted(std::span<const ActivityId> ids) const;

  [[nodiscard]] bool is_valid(const ModeVector& modes) const noexcept;
  /// Throws ModelError naming the first out-of-range choice.
  void require_valid(const ModeVector& modes) const;
  [[nodiscard]] ModeVector uniform_modes(int option) const;
  [[nodiscard]] std::vector<int> durations_for(const ModeVector& modes) const;

  friend bool operator==(const TctpInstance&, const TctpInstance&) = default;

private:
  ProjectNetwork network_;
  std::vector<std::vector<ActivityOption>> options_;
  std::optional<Money> indirect_;
};

/// Parses "1-6", "1,3,5" or "1-3,7" into a sorted id list.
std::vector<ActivityId> parse_id_ranges(const std::string& text);

}  // namespace metasched
