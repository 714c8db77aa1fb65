#include "metasched/cpm.hpp"

#include <algorithm>
#include <limits>
#include <ranges>

namespace metasched::cpm {

namespace {

void require_durations(const ProjectNetwork& net, std::span<const int> durations) {
  if (durations.size() != net.size())
    throw ModelError("missing duration: got " + std::to_string(durations.size()) + " for " +
                     std::to_string(net.size()) + " activities");
  for (std::size_t i = 0; i < durations.size(); ++i)
    if (durations[i] < 0)
      throw ModelError("negative duration for activity " + std::to_string(net.activity(i).id));
}

}  // namespace

const ActivityTimes& CpmResult::at(ActivityId id) const {
  auto it = std::ranges::find(activities, id, &ActivityTimes::id);
  if (it == activities.end()) throw ModelError("unknown activity id " + std::to_string(id));
  return *it;
}

std::vector<EarlyTimes> forward_pass(const ProjectNetwork& net, std::span<const int> durations) {
  require_durations(net, durations);
  std::vector<EarlyTimes> early(net.size());
  for (std::size_t v : net.topological_order()) {
    int es = 0;
    for (std::size_t p : net.predecessor_indices(v)) es = std::max(es, early[p].finish);
    early[v] = {es, es + durations[v]};
  }
  return early;
}

std::vector<LateTimes> backward_pass(const ProjectNetwork& net, std::span<const int> durations, int makespan) {
  require_durations(net, durations);
  const auto& order = net.topological_order();
  const int bound = cpm::makespan(net, durations);
  if (makespan < bound)
    throw ModelError("makespan " + std::to_string(makespan) + " is below the forward-pass makespan " +
                     std::to_string(bound));

  std::vector<LateTimes> late(net.size());
  for (std::size_t v : order | std::views::reverse) {
    int lf = makespan;
    for (std::size_t s : net.successor_indices(v)) lf = std::min(lf, late[s].start);
    late[v] = {lf - durations[v], lf};
  }
  return late;
}

int makespan(const ProjectNetwork& net, std::span<const int> durations) {
  require_durations(net, durations);
  std::vector<int> finish(net.size(), 0);
  int span = 0;
  for (std::size_t v : net.topological_order()) {
    int es = 0;
    for (std::size_t p : net.predecessor_indices(v)) es = std::max(es, finish[p]);
    finish[v] = es + durations[v];
    span = std::max(span, finish[v]);
  }
  return span;
}

CpmResult compute_cpm(const ProjectNetwork& net, std::span<const int> durations) {
  const auto early = forward_pass(net, durations);
  CpmResult result;
  for (const auto& e : early) result.makespan = std::max(result.makespan, e.finish);
  const auto late = backward_pass(net, durations, result.makespan);

  result.activities.reserve(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    ActivityTimes t{net.activity(i).id, durations[i], early[i].start, early[i].finish,
                    late[i].start,      late[i].finish, late[i].start - early[i].start};
    if (t.critical()) result.critical.push_back(t.id);
    result.activities.push_back(t);
  }
  std::ranges::sort(result.critical);
  return result;
}

int makespan_for_modes(const TctpInstance& instance, const ModeVector& modes) {
  return makespan(instance.network(), instance.durations_for(modes));
}

}  // namespace metasched::cpm
