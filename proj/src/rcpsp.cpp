#include "metasched/rcpsp.hpp"

#include <algorithm>
#include <set>

#include "metasched/cpm.hpp"

namespace metasched::rcpsp {

int ResourceProfile::peak() const noexcept {
  return usage.empty() ? 0 : *std::ranges::max_element(usage);
}

bool is_precedence_feasible(const ProjectNetwork& net, std::span<const ActivityId> list) {
  if (list.size() != net.size()) return false;
  std::vector<bool> placed(net.size(), false);
  for (ActivityId id : list) {
    if (!net.contains(id)) return false;
    const std::size_t v = net.index_of(id);
    if (placed[v]) return false;
    for (std::size_t p : net.predecessor_indices(v))
      if (!placed[p]) return false;
    placed[v] = true;
  }
  return true;
}

void require_feasible_list(const ProjectNetwork& net, std::span<const ActivityId> list) {
  if (list.size() != net.size())
    throw ModelError("activity list has " + std::to_string(list.size()) + " entries, expected " +
                     std::to_string(net.size()));
  std::vector<bool> placed(net.size(), false);
  for (ActivityId id : list) {
    if (!net.contains(id)) throw ModelError("activity list names unknown id " + std::to_string(id));
    const std::size_t v = net.index_of(id);
    if (placed[v]) throw ModelError("activity list repeats id " + std::to_string(id));
    for (std::size_t p : net.predecessor_indices(v))
      if (!placed[p])
        throw ModelError("precedence-infeasible list: " + std::to_string(id) + " appears before its predecessor " +
                         std::to_string(net.activity(p).id));
    placed[v] = true;
  }
}

void require_capacity(const ProjectNetwork& net, int capacity) {
  if (capacity < net.max_demand() || capacity < 1) throw ModelError("capacity below maximum activity demand");
}

SerialDecoder::SerialDecoder(const ProjectNetwork& net, int capacity)
    : net_(&net), capacity_(capacity), durations_(net.durations()), demands_(net.demands()) {
  require_capacity(net, capacity);
}

std::vector<std::size_t> SerialDecoder::to_indices(std::span<const ActivityId> list) const {
  std::vector<std::size_t> out;
  out.reserve(list.size());
  for (ActivityId id : list) out.push_back(net_->index_of(id));
  return out;
}

int SerialDecoder::decode(std::span<const std::size_t> order, std::span<const int> durations,
                          std::vector<int>& starts) const {
  const std::size_t n = net_->size();
  starts.assign(n, 0);
  std::vector<int> usage;
  int span = 0;
  for (std::size_t v : order) {
    int earliest = 0;
    for (std::size_t p : net_->predecessor_indices(v)) earliest = std::max(earliest, starts[p] + durations[p]);
    const int d = durations[v];
    const int demand = demands_[v];
    int t = earliest;
    if (demand > 0 && d > 0) {
      for (;;) {
        if (usage.size() < static_cast<std::size_t>(t + d)) usage.resize(t + d, 0);
        int blocked = -1;
        for (int u = t + d - 1; u >= t; --u) {
          if (usage[u] + demand > capacity_) {
            blocked = u;
            break;
          }
        }
        if (blocked < 0) break;
        // Any window that still covers `blocked` is infeasible, so jumping
        // past it visits the same first feasible start as unit steps.
        t = blocked + 1;
      }
      for (int u = t; u < t + d; ++u) usage[u] += demand;
    }
    starts[v] = t;
    span = std::max(span, t + d);
  }
  return span;
}

Schedule serial_sgs(const ProjectNetwork& net, int capacity, std::span<const ActivityId> list) {
  require_feasible_list(net, list);
  SerialDecoder decoder(net, capacity);
  std::vector<int> starts;
  Schedule s;
  s.makespan = decoder.decode(decoder.to_indices(list), starts);
  for (std::size_t i = 0; i < net.size(); ++i) s.start_times.emplace(net.activity(i).id, starts[i]);
  return s;
}

ResourceProfile resource_profile(const ProjectNetwork& net, const Schedule& schedule) {
  ResourceProfile profile;
  profile.usage.assign(static_cast<std::size_t>(std::max(schedule.makespan, 0)), 0);
  for (const auto& a : net.activities()) {
    auto it = schedule.start_times.find(a.id);
    if (it == schedule.start_times.end()) continue;
    for (int t = it->second; t < it->second + a.duration; ++t) {
      if (t < 0) continue;
      if (static_cast<std::size_t>(t) >= profile.usage.size()) profile.usage.resize(t + 1, 0);
      profile.usage[t] += a.resource_demand;
    }
  }
  return profile;
}

std::vector<ScheduleViolation> check_schedule(const ProjectNetwork& net, const Schedule& schedule, int capacity) {
  using Kind = ScheduleViolation::Kind;
  std::vector<ScheduleViolation> report;
  int span = 0;
  for (const auto& a : net.activities()) {
    auto it = schedule.start_times.find(a.id);
    if (it == schedule.start_times.end()) {
      report.push_back({Kind::MissingActivity, a.id, 0, 0, "activity " + std::to_string(a.id) + " is not scheduled"});
      continue;
    }
    if (it->second < 0)
      report.push_back({Kind::NegativeStart, a.id, 0, it->second,
                        "activity " + std::to_string(a.id) + " starts before time 0"});
    span = std::max(span, it->second + a.duration);
    for (ActivityId p : net.predecessors(a.id)) {
      if (!net.contains(p)) continue;
      auto pit = schedule.start_times.find(p);
      if (pit == schedule.start_times.end()) continue;
      const int finish = pit->second + net.activity(net.index_of(p)).duration;
      if (it->second < finish)
        report.push_back({Kind::Precedence, a.id, p, it->second,
                          "activity " + std::to_string(a.id) + " starts at " + std::to_string(it->second) +
                              " before predecessor " + std::to_string(p) + " finishes at " + std::to_string(finish)});
    }
  }
  if (span != schedule.makespan)
    report.push_back({Kind::Makespan, 0, 0, schedule.makespan,
                      "recorded makespan " + std::to_string(schedule.makespan) + " differs from actual " +
                          std::to_string(span)});

  const auto profile = resource_profile(net, schedule);
  for (std::size_t t = 0; t < profile.usage.size(); ++t)
    if (profile.usage[t] > capacity)
      report.push_back({Kind::Capacity, 0, 0, static_cast<int>(t),
                        "usage " + std::to_string(profile.usage[t]) + " exceeds capacity " + std::to_string(capacity) +
                            " at t=" + std::to_string(t)});
  return report;
}

std::vector<ActivityId> constrained_critical(const ProjectNetwork& net, int capacity,
                                             std::span<const ActivityId> list) {
  require_feasible_list(net, list);
  SerialDecoder decoder(net, capacity);
  const auto order = decoder.to_indices(list);
  std::vector<int> durations = net.durations();
  std::vector<int> starts;
  const int base = decoder.decode(order, durations, starts);

  std::vector<ActivityId> critical;
  for (std::size_t i = 0; i < net.size(); ++i) {
    ++durations[i];
    if (decoder.decode(order, durations, starts) > base) critical.push_back(net.activity(i).id);
    --durations[i];
  }
  std::ranges::sort(critical);
  return critical;
}

Schedule early_start_schedule(const ProjectNetwork& net) {
  const auto early = cpm::forward_pass(net, net.durations());
  Schedule s;
  for (std::size_t i = 0; i < net.size(); ++i) {
    s.start_times.emplace(net.activity(i).id, early[i].start);
    s.makespan = std::max(s.makespan, early[i].finish);
  }
  return s;
}

ActivityList topological_list(const ProjectNetwork& net) {
  ActivityList list;
  for (std::size_t v : net.topological_order()) list.push_back(net.activity(v).id);
  return list;
}

}  // namespace metasched::rcpsp
