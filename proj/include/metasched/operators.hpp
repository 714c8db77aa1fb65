#pragma once

#include <span>
#include <vector>

#include "metasched/model.hpp"
#include "metasched/rcpsp.hpp"
#include "metasched/rng.hpp"

namespace metasched::search {

/// Dense id-keyed view of a network's direct precedence relation.
class PrecedenceIndex {
public:
  explicit PrecedenceIndex(const ProjectNetwork& net);

  /// True if `before` is a direct predecessor of `after`.
  [[nodiscard]] bool precedes(ActivityId before, ActivityId after) const;
  [[nodiscard]] std::size_t position(ActivityId id) const;
  [[nodiscard]] const ProjectNetwork& network() const noexcept { return *net_; }

private:
  const ProjectNetwork* net_;
  std::vector<std::size_t> slot_;
  std::vector<char> matrix_;
};

/// Order crossover without repair: `parent1[cut1, cut2)` is copied in place
/// and the remaining positions are filled left to right with the missing
/// ids in the order they appear in `parent2`.
/// Throws ModelError when the parents are not permutations of one id set.
std::vector<ActivityId> order_crossover_raw(std::span<const ActivityId> parent1, std::span<const ActivityId> parent2,
                                            std::size_t cut1, std::size_t cut2);

/// Stable topological reinsertion: repeatedly emits the earliest entry of
/// `list` whose predecessors are all emitted. Feasible input is unchanged.
rcpsp::ActivityList repair_precedence(const ProjectNetwork& net, std::span<const ActivityId> list);

rcpsp::ActivityList order_crossover(const ProjectNetwork& net, std::span<const ActivityId> parent1,
                                    std::span<const ActivityId> parent2, std::size_t cut1, std::size_t cut2);

/// Positions i where swapping list[i] and list[i+1] keeps the list feasible.
std::vector<std::size_t> feasible_adjacent_swaps(const PrecedenceIndex& prec, std::span<const ActivityId> list);

/// Swaps one uniformly drawn feasible adjacent pair; returns the input
/// unchanged when no such pair exists.
rcpsp::ActivityList neighbor_swap(const PrecedenceIndex& prec, std::span<const ActivityId> list, Rng& rng);
rcpsp::ActivityList neighbor_swap(const ProjectNetwork& net, std::span<const ActivityId> list, Rng& rng);

/// Replaces one uniformly drawn multi-option activity's choice by a
/// different valid option. Returns the input unchanged when every activity
/// has a single option.
ModeVector neighbor_mode_change(const TctpInstance& instance, const ModeVector& modes, Rng& rng);

/// Uniformly random eligible activity at each step.
rcpsp::ActivityList random_activity_list(const ProjectNetwork& net, Rng& rng);

ModeVector random_modes(const TctpInstance& instance, Rng& rng);

}  // namespace metasched::search
