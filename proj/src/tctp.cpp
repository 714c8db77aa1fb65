#include "metasched/tctp.hpp"

#include <algorithm>
#include <sstream>

#include "metasched/cpm.hpp"

namespace metasched::tctp {

Money direct_cost(const TctpInstance& instance, const ModeVector& modes) {
  instance.require_valid(modes);
  Money sum = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) sum += instance.options(i)[modes.choices[i] - 1].direct_cost;
  return sum;
}

Evaluation evaluate_mode_vector(const TctpInstance& instance, const ModeVector& modes, Money indirect_per_day) {
  Evaluation e;
  e.duration = cpm::makespan_for_modes(instance, modes);
  e.direct_cost = direct_cost(instance, modes);
  e.total_cost = static_cast<Money>(e.duration) * indirect_per_day + e.direct_cost;
  return e;
}

Evaluation evaluate_mode_vector(const TctpInstance& instance, const ModeVector& modes) {
  return evaluate_mode_vector(instance, modes, instance.indirect_cost_per_day());
}

Money min_direct_cost(const TctpInstance& instance) {
  Money sum = 0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const auto& opts = instance.options(i);
    sum += std::ranges::min_element(opts, {}, &ActivityOption::direct_cost)->direct_cost;
  }
  return sum;
}

bool ParetoArchive::insert(ParetoPoint candidate) {
  const Objectives c = candidate.objectives();
  auto pos = std::ranges::lower_bound(points_, c.duration, {}, &ParetoPoint::duration);

  // Sorted by duration with strictly descending cost: the only members that
  // can dominate or equal the candidate are at or before `pos`.
  if (pos != points_.end() && pos->objectives() == c) {
    if (candidate.encoding < pos->encoding) {
      pos->encoding = std::move(candidate.encoding);
      return true;
    }
    return false;
  }
  if (pos != points_.begin() && std::prev(pos)->cost <= c.cost) return false;
  if (pos != points_.end() && pos->duration == c.duration && pos->cost <= c.cost) return false;

  auto last = pos;
  while (last != points_.end() && last->cost >= c.cost) ++last;
  pos = points_.erase(pos, last);
  points_.insert(pos, std::move(candidate));
  return true;
}

void ParetoArchive::merge(const ParetoArchive& other) {
  for (const auto& p : other.points_) insert(p);
}

std::vector<Objectives> ParetoArchive::objectives() const {
  std::vector<Objectives> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back(p.objectives());
  return out;
}

bool ParetoArchive::contains(Objectives o) const {
  return std::ranges::any_of(points_, [&](const ParetoPoint& p) { return p.objectives() == o; });
}

ParetoArchive archive_insert(ParetoArchive archive, ParetoPoint candidate) {
  archive.insert(std::move(candidate));
  return archive;
}

std::string encoding_to_string(std::span<const int> encoding, char separator) {
  std::ostringstream os;
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    if (i) os << separator;
    os << encoding[i];
  }
  return os.str();
}

}  // namespace metasched::tctp
