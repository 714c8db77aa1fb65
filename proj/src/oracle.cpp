#include "metasched/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace metasched::oracle {

namespace {

// Id-level adjacency straight from the network's raw predecessor lists.
struct Graph {
  std::vector<ActivityId> ids;
  std::map<ActivityId, std::size_t> slot;
  std::vector<std::vector<std::size_t>> preds;
};

Graph build_graph(const ProjectNetwork& net) {
  Graph g;
  for (const auto& a : net.activities()) {
    g.slot[a.id] = g.ids.size();
    g.ids.push_back(a.id);
  }
  g.preds.resize(g.ids.size());
  for (std::size_t i = 0; i < g.ids.size(); ++i)
    for (ActivityId p : net.predecessors(g.ids[i])) {
      auto it = g.slot.find(p);
      if (it == g.slot.end()) throw ModelError("dangling predecessor " + std::to_string(p));
      g.preds[i].push_back(it->second);
    }
  return g;
}

// Memoized recursion on the finish time of each activity.
int longest_path(const Graph& g, std::span<const int> durations) {
  const std::size_t n = g.ids.size();
  std::vector<int> finish(n, -1);
  std::vector<char> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<int(std::size_t)> solve = [&](std::size_t v) -> int {
    if (state[v] == 2) return finish[v];
    if (state[v] == 1) throw ModelError("cycle detected at activity " + std::to_string(g.ids[v]));
    state[v] = 1;
    int start = 0;
    for (std::size_t p : g.preds[v]) start = std::max(start, solve(p));
    state[v] = 2;
    return finish[v] = start + durations[v];
  };
  int best = 0;
  for (std::size_t v = 0; v < n; ++v) best = std::max(best, solve(v));
  return best;
}

}  // namespace

int longest_path_makespan(const ProjectNetwork& net, std::span<const int> durations) {
  if (durations.size() != net.size()) throw ModelError("duration count does not match activity count");
  return longest_path(build_graph(net), durations);
}

ExactTctp exhaustive_tctp(const TctpInstance& instance, const OracleGuard& guard,
                          std::optional<Money> indirect_per_day) {
  const std::size_t n = instance.size();
  if (n > guard.max_activities)
    throw GuardExceeded("exhaustive TCTP refuses " + std::to_string(n) + " activities (guard " +
                        std::to_string(guard.max_activities) + ")");
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) {
    combos *= instance.option_count(i);
    if (combos > guard.max_states)
      throw GuardExceeded("exhaustive TCTP exceeds the state budget of " + std::to_string(guard.max_states));
  }

  const Graph g = build_graph(instance.network());
  std::map<int, FrontPoint> cheapest_by_duration;
  ExactTctp out;
  out.combinations = combos;

  std::vector<int> modes(n, 1);
  std::vector<int> durations(n);
  for (std::uint64_t k = 0; k < combos; ++k) {
    Money cost = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& opt = instance.options(i)[modes[i] - 1];
      durations[i] = opt.duration;
      cost += opt.direct_cost;
    }
    const int span = longest_path(g, durations);

    // Odometer order visits vectors lexicographically, so the first hit of
    // a value is the smallest vector attaining it.
    auto [it, inserted] = cheapest_by_duration.try_emplace(span, FrontPoint{span, cost, modes});
    if (!inserted && cost < it->second.direct_cost) it->second = {span, cost, modes};

    if (indirect_per_day) {
      const Money total = static_cast<Money>(span) * *indirect_per_day + cost;
      if (!out.min_total_cost || total < *out.min_total_cost) {
        out.min_total_cost = total;
        out.min_total_duration = span;
        out.min_total_modes = modes;
      }
    }

    for (std::size_t i = n; i-- > 0;) {
      if (modes[i] < static_cast<int>(instance.option_count(i))) {
        ++modes[i];
        break;
      }
      modes[i] = 1;
    }
  }

  for (const auto& [span, point] : cheapest_by_duration)
    if (out.front.empty() || point.direct_cost < out.front.back().direct_cost) out.front.push_back(point);
  return out;
}

std::map<ActivityId, int> reference_serial_sgs(const ProjectNetwork& net, int capacity,
                                              std::span<const ActivityId> list) {
  const Graph g = build_graph(net);
  std::map<ActivityId, int> start;
  std::map<ActivityId, int> finish;
  std::vector<int> usage;
  for (ActivityId id : list) {
    auto slot = g.slot.find(id);
    if (slot == g.slot.end()) throw ModelError("unknown activity " + std::to_string(id));
    const Activity& a = net.activities()[slot->second];
    if (a.resource_demand > capacity) throw ModelError("capacity below maximum activity demand");
    int t = 0;
    for (std::size_t p : g.preds[slot->second]) {
      auto f = finish.find(g.ids[p]);
      if (f == finish.end()) throw ModelError("precedence-infeasible list at activity " + std::to_string(id));
      t = std::max(t, f->second);
    }
    auto fits = [&](int s) {
      for (int u = s; u < s + a.duration; ++u) {
        const int used = u < static_cast<int>(usage.size()) ? usage[u] : 0;
        if (used + a.resource_demand > capacity) return false;
      }
      return true;
    };
    while (!fits(t)) ++t;
    if (static_cast<int>(usage.size()) < t + a.duration) usage.resize(t + a.duration, 0);
    for (int u = t; u < t + a.duration; ++u) usage[u] += a.resource_demand;
    start[id] = t;
    finish[id] = t + a.duration;
  }
  return start;
}

ExactRcpsp exhaustive_rcpsp(const ProjectNetwork& net, int capacity, const OracleGuard& guard) {
  const std::size_t n = net.size();
  if (n > guard.max_activities)
    throw GuardExceeded("exhaustive RCPSP refuses " + std::to_string(n) + " activities (guard " +
                        std::to_string(guard.max_activities) + ")");
  if (n > 32) throw GuardExceeded("exhaustive RCPSP supports at most 32 activities");
  for (const auto& a : net.activities())
    if (a.resource_demand > capacity) throw ModelError("capacity below maximum activity demand");
  const Graph g = build_graph(net);
  (void)longest_path(g, net.durations());  // cycle check

  long long horizon = 0;
  for (const auto& a : net.activities()) horizon += a.duration;

  ExactRcpsp best;
  best.makespan = static_cast<int>(horizon) + 1;
  std::set<std::pair<std::uint32_t, std::vector<int>>> seen;

  std::vector<int> start(n, -1);
  std::vector<int> usage(static_cast<std::size_t>(horizon) + 1, 0);
  std::vector<ActivityId> list;
  std::uint32_t placed = 0;

  std::function<void(int)> dfs = [&](int partial_span) {
    if (++best.states_explored > guard.max_states)
      throw GuardExceeded("exhaustive RCPSP exceeds the state budget of " + std::to_string(guard.max_states));
    if (list.size() == n) {
      if (partial_span < best.makespan) {
        best.makespan = partial_span;
        best.best_list = list;
      }
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (placed & (1u << v)) continue;
      bool ready = true;
      int t = 0;
      for (std::size_t p : g.preds[v]) {
        if (!(placed & (1u << p))) { ready = false; break; }
        t = std::max(t, start[p] + net.activities()[p].duration);
      }
      if (!ready) continue;
      const Activity& a = net.activities()[v];
      for (;;) {
        bool ok = true;
        for (int u = t; u < t + a.duration; ++u)
          if (usage[u] + a.resource_demand > capacity) { ok = false; break; }
        if (ok) break;
        ++t;
      }
      const int span = std::max(partial_span, t + a.duration);
      if (span >= best.makespan) continue;

      start[v] = t;
      placed |= 1u << v;
      std::vector<int> key(start.begin(), start.end());
      if (seen.emplace(placed, std::move(key)).second) {
        for (int u = t; u < t + a.duration; ++u) usage[u] += a.resource_demand;
        list.push_back(a.id);
        dfs(span);
        list.pop_back();
        for (int u = t; u < t + a.duration; ++u) usage[u] -= a.resource_demand;
      }
      placed &= ~(1u << v);
      start[v] = -1;
    }
  };
  if (n == 0) {
    best.makespan = 0;
    return best;
  }
  dfs(0);
  return best;
}

}  // namespace metasched::oracle
