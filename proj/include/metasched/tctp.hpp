#pragma once

#include <span>
#include <string>
#include <vector>

#include "metasched/model.hpp"

namespace metasched::tctp {

struct Evaluation {
  int duration = 0;
  Money direct_cost = 0;
  Money total_cost = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

/// total = duration * I + sum of chosen direct costs, with I taken from the
/// instance (throws if the instance has none).
Evaluation evaluate_mode_vector(const TctpInstance& instance, const ModeVector& modes);

/// Same, with an explicit daily indirect cost.
Evaluation evaluate_mode_vector(const TctpInstance& instance, const ModeVector& modes, Money indirect_per_day);

Money direct_cost(const TctpInstance& instance, const ModeVector& modes);

/// Sum of every activity's cheapest option.
Money min_direct_cost(const TctpInstance& instance);

struct Objectives {
  int duration = 0;
  Money cost = 0;
  friend bool operator==(const Objectives&, const Objectives&) = default;
  friend auto operator<=>(const Objectives&, const Objectives&) = default;
};

/// Weak dominance with at least one strict improvement; both minimized.
constexpr bool dominates(Objectives a, Objectives b) noexcept {
  return a.duration <= b.duration && a.cost <= b.cost && (a.duration < b.duration || a.cost < b.cost);
}

/// A front point carries the candidate that produced it. `encoding` is the
/// candidate's element sequence: option indices for TCTP, activity ids for
/// RCPSP lists.
struct ParetoPoint {
  int duration = 0;
  Money cost = 0;
  std::vector<int> encoding;

  [[nodiscard]] Objectives objectives() const noexcept { return {duration, cost}; }
  friend bool operator==(const ParetoPoint&, const ParetoPoint&) = default;
};

/// Non-dominated (duration, cost) set, kept sorted by duration ascending
/// (cost therefore strictly descending). Among equal objective vectors the
/// lexicographically smallest encoding is retained, so the final content
/// does not depend on insertion order.
class ParetoArchive {
public:
  /// Returns true if the archive changed.
  bool insert(ParetoPoint candidate);
  void merge(const ParetoArchive& other);

  [[nodiscard]] const std::vector<ParetoPoint>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] bool empty() const noexcept { return points_.empty(); }
  [[nodiscard]] std::vector<Objectives> objectives() const;
  [[nodiscard]] bool contains(Objectives o) const;

  friend bool operator==(const ParetoArchive&, const ParetoArchive&) = default;

private:
  std::vector<ParetoPoint> points_;
};

/// Functional form of ParetoArchive::insert.
ParetoArchive archive_insert(ParetoArchive archive, ParetoPoint candidate);

std::string encoding_to_string(std::span<const int> encoding, char separator = ' ');

}  // namespace metasched::tctp
