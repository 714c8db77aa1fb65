#include "metasched/model.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace metasched {

namespace {

std::string join_ids(const std::vector<ActivityId>& ids) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ids.size(); ++i) { os << (i ? ", " : "") << ids[i]; }
  return os.str();
}

// Strongly connected components with more than one member (Tarjan).
std::vector<std::vector<std::size_t>> cyclic_components(
    const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;

  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : succ[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      if (comp.size() > 1) out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  return out;
}

}  // namespace

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::DuplicateId: return "duplicate-id";
    case Violation::Kind::DanglingReference: return "dangling-reference";
    case Violation::Kind::SelfLoop: return "self-loop";
    case Violation::Kind::Cycle: return "cycle";
    case Violation::Kind::NegativeValue: return "negative-value";
    case Violation::Kind::NoSource: return "no-source";
    case Violation::Kind::NoSink: return "no-sink";
  }
  return "unknown";
}

ProjectNetwork::ProjectNetwork(std::vector<Activity> activities,
                               std::map<ActivityId, std::vector<ActivityId>> predecessors)
    : activities_(std::move(activities)) {
  const std::size_t n = activities_.size();
  for (std::size_t i = 0; i < n; ++i) index_.try_emplace(activities_[i].id, i);

  preds_.resize(n);
  pred_index_.resize(n);
  succ_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = predecessors.find(activities_[i].id);
    if (it == predecessors.end()) continue;
    std::vector<ActivityId> ids = it->second;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (ActivityId p : ids) {
      auto found = index_.find(p);
      if (found == index_.end()) continue;
      pred_index_[i].push_back(found->second);
      succ_index_[found->second].push_back(i);
    }
    preds_[i] = std::move(ids);
  }
  for (auto& s : succ_index_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  // Kahn's algorithm, smallest index first for a stable order.
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = pred_index_[i].size();
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  while (!ready.empty()) {
    const std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(v);
    for (std::size_t s : succ_index_[v])
      if (--indegree[s] == 0) ready.insert(s);
  }
  acyclic_ = topo_.size() == n;
  if (!acyclic_) topo_.clear();
}

bool ProjectNetwork::contains(ActivityId id) const noexcept { return index_.contains(id); }

std::size_t ProjectNetwork::index_of(ActivityId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ModelError("unknown activity id " + std::to_string(id));
  return it->second;
}

const std::vector<ActivityId>& ProjectNetwork::predecessors(ActivityId id) const {
  return preds_.at(index_of(id));
}

std::vector<ActivityId> ProjectNetwork::successors(ActivityId id) const {
  std::vector<ActivityId> out;
  for (std::size_t s : succ_index_.at(index_of(id))) out.push_back(activities_[s].id);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::size_t>& ProjectNetwork::topological_order() const {
  if (!acyclic_) throw ModelError("precedence relation is cyclic");
  return topo_;
}

std::vector<int> ProjectNetwork::durations() const {
  std::vector<int> out;
  out.reserve(size());
  for (const auto& a : activities_) out.push_back(a.duration);
  return out;
}

std::vector<int> ProjectNetwork::demands() const {
  std::vector<int> out;
  out.reserve(size());
  for (const auto& a : activities_) out.push_back(a.resource_demand);
  return out;
}

int ProjectNetwork::max_demand() const noexcept {
  int m = 0;
  for (const auto& a : activities_) m = std::max(m, a.resource_demand);
  return m;
}

long long ProjectNetwork::total_demand() const noexcept {
  long long t = 0;
  for (const auto& a : activities_) t += a.resource_demand;
  return t;
}

ProjectNetwork ProjectNetwork::induced(std::span<const ActivityId> ids) const {
  std::set<ActivityId> keep(ids.begin(), ids.end());
  std::vector<Activity> acts;
  std::map<ActivityId, std::vector<ActivityId>> preds;
  for (std::size_t i = 0; i < size(); ++i) {
    const auto& a = activities_[i];
    if (!keep.contains(a.id)) continue;
    acts.push_back(a);
    std::vector<ActivityId> kept;
    for (ActivityId p : preds_[i])
      if (keep.contains(p)) kept.push_back(p);
    if (!kept.empty()) preds.emplace(a.id, std::move(kept));
  }
  for (ActivityId id : keep)
    if (!contains(id)) throw ModelError("unknown activity id " + std::to_string(id));
  return {std::move(acts), std::move(preds)};
}

ProjectNetwork ProjectNetwork::with_durations(std::span<const int> durations) const {
  if (durations.size() != size()) throw ModelError("duration count does not match activity count");
  ProjectNetwork copy = *this;
  for (std::size_t i = 0; i < size(); ++i) copy.activities_[i].duration = durations[i];
  return copy;
}

std::vector<Violation> validate_network(const ProjectNetwork& net) {
  std::vector<Violation> report;
  std::map<ActivityId, int> seen;
  for (const auto& a : net.activities()) ++seen[a.id];
  for (const auto& [id, count] : seen)
    if (count > 1)
      report.push_back({Violation::Kind::DuplicateId, {id},
                        "activity id " + std::to_string(id) + " appears " + std::to_string(count) + " times"});

  for (const auto& a : net.activities()) {
    if (a.duration < 0 || a.resource_demand < 0)
      report.push_back({Violation::Kind::NegativeValue, {a.id},
                        "activity " + std::to_string(a.id) + " has a negative duration or demand"});
  }

  for (std::size_t i = 0; i < net.size(); ++i) {
    const ActivityId id = net.activity(i).id;
    for (ActivityId p : net.predecessors(id)) {
      if (p == id) {
        report.push_back({Violation::Kind::SelfLoop, {id},
                          "activity " + std::to_string(id) + " depends on itself"});
      } else if (!net.contains(p)) {
        report.push_back({Violation::Kind::DanglingReference, {id, p},
                          "activity " + std::to_string(id) + " depends on nonexistent id " + std::to_string(p)});
      }
    }
  }

  std::vector<std::vector<std::size_t>> succ(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) succ[i] = net.successor_indices(i);
  for (const auto& comp : cyclic_components(succ)) {
    std::vector<ActivityId> ids;
    for (std::size_t v : comp) ids.push_back(net.activity(v).id);
    std::sort(ids.begin(), ids.end());
    report.push_back({Violation::Kind::Cycle, ids, "precedence cycle among activities " + join_ids(ids)});
  }

  if (!net.empty()) {
    bool has_source = false, has_sink = false;
    for (std::size_t i = 0; i < net.size(); ++i) {
      has_source |= net.predecessor_indices(i).empty();
      has_sink |= net.successor_indices(i).empty();
    }
    if (!has_source) report.push_back({Violation::Kind::NoSource, {}, "no activity without predecessors"});
    if (!has_sink) report.push_back({Violation::Kind::NoSink, {}, "no activity without successors"});
  }
  return report;
}

ProjectNetwork derive_precedence_from_nodes(std::span<const AoaArc> arcs) {
  std::set<ActivityId> ids;
  for (const auto& arc : arcs)
    if (!ids.insert(arc.activity_id).second)
      throw ModelError("duplicate activity id " + std::to_string(arc.activity_id));

  std::vector<AoaArc> sorted(arcs.begin(), arcs.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const AoaArc& a, const AoaArc& b) { return a.activity_id < b.activity_id; });

  std::multimap<int, ActivityId> ending_at;
  for (const auto& arc : sorted) ending_at.emplace(arc.end_node, arc.activity_id);

  std::vector<Activity> acts;
  std::map<ActivityId, std::vector<ActivityId>> preds;
  for (const auto& arc : sorted) {
    acts.push_back({arc.activity_id, arc.duration, arc.resource_demand});
    auto [lo, hi] = ending_at.equal_range(arc.start_node);
    std::vector<ActivityId> p;
    for (auto it = lo; it != hi; ++it)
      if (it->second != arc.activity_id) p.push_back(it->second);
    if (!p.empty()) preds.emplace(arc.activity_id, std::move(p));
  }

  ProjectNetwork net(std::move(acts), std::move(preds));
  if (!net.is_acyclic()) throw ModelError("node labels induce a cyclic precedence relation");
  return net;
}

std::vector<std::string> check_successor_hints(std::span<const AoaArc> arcs) {
  std::vector<std::string> warnings;
  for (const auto& arc : arcs) {
    if (!arc.successor_nodes) continue;
    std::set<int> expected;
    for (const auto& other : arcs)
      if (other.start_node == arc.end_node && other.activity_id != arc.activity_id)
        expected.insert(other.end_node);
    std::set<int> listed(arc.successor_nodes->begin(), arc.successor_nodes->end());
    if (expected != listed) {
      std::ostringstream os;
      os << "activity " << arc.activity_id << ": successor listing {";
      bool first = true;
      for (int v : listed) { os << (first ? "" : ", ") << v; first = false; }
      os << "} differs from derived successor end nodes {";
      first = true;
      for (int v : expected) { os << (first ? "" : ", ") << v; first = false; }
      os << "}";
      warnings.push_back(os.str());
    }
  }
  return warnings;
}

TctpInstance::TctpInstance(ProjectNetwork network, std::vector<std::vector<ActivityOption>> options,
                           std::optional<Money> indirect_cost_per_day)
    : network_(std::move(network)), options_(std::move(options)), indirect_(indirect_cost_per_day) {
  if (options_.size() != network_.size())
    throw ModelError("option table size does not match activity count");
  for (std::size_t i = 0; i < options_.size(); ++i) {
    const auto id = std::to_string(network_.activity(i).id);
    if (options_[i].empty() || options_[i].size() > kMaxOptions)
      throw ModelError("activity " + id + " must have between 1 and 5 options");
    for (const auto& o : options_[i]) {
      if (o.duration < 1) throw ModelError("activity " + id + " has an option with duration < 1");
      if (o.direct_cost < 0) throw ModelError("activity " + id + " has an option with negative cost");
    }
  }
  if (indirect_ && *indirect_ < 0) throw ModelError("indirect cost must be non-negative");
}

const std::vector<ActivityOption>& TctpInstance::options_for(ActivityId id) const {
  return options_.at(network_.index_of(id));
}

Money TctpInstance::indirect_cost_per_day() const {
  if (!indirect_) throw ModelError("indirect cost required");
  return *indirect_;
}

TctpInstance TctpInstance::with_indirect_cost(Money per_day) const {
  return {network_, options_, per_day};
}

TctpInstance TctpInstance::restricted(std::span<const ActivityId> ids) const {
  ProjectNetwork sub = network_.induced(ids);
  std::vector<std::vector<ActivityOption>> opts;
  for (const auto& a : sub.activities()) opts.push_back(options_for(a.id));
  return {std::move(sub), std::move(opts), indirect_};
}

bool TctpInstance::is_valid(const ModeVector& modes) const noexcept {
  if (modes.choices.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (modes.choices[i] < 1 || static_cast<std::size_t>(modes.choices[i]) > options_[i].size()) return false;
  return true;
}

void TctpInstance::require_valid(const ModeVector& modes) const {
  if (modes.choices.size() != size())
    throw ModelError("mode vector has " + std::to_string(modes.choices.size()) + " entries, expected " +
                     std::to_string(size()));
  for (std::size_t i = 0; i < size(); ++i)
    if (modes.choices[i] < 1 || static_cast<std::size_t>(modes.choices[i]) > options_[i].size())
      throw ModelError("invalid option index " + std::to_string(modes.choices[i]) + " for activity " +
                       std::to_string(network_.activity(i).id));
}

ModeVector TctpInstance::uniform_modes(int option) const {
  ModeVector m{std::vector<int>(size(), option)};
  require_valid(m);
  return m;
}

std::vector<int> TctpInstance::durations_for(const ModeVector& modes) const {
  require_valid(modes);
  std::vector<int> d(size());
  for (std::size_t i = 0; i < size(); ++i) d[i] = options_[i][modes.choices[i] - 1].duration;
  return d;
}

std::vector<ActivityId> parse_id_ranges(const std::string& text) {
  std::set<ActivityId> ids;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      std::size_t pos = 0;
      auto dash = part.find('-', 1);
      if (dash == std::string::npos) {
        int v = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument(part);
        ids.insert(v);
      } else {
        int lo = std::stoi(part.substr(0, dash));
        int hi = std::stoi(part.substr(dash + 1));
        if (lo > hi) throw std::invalid_argument(part);
        for (int v = lo; v <= hi; ++v) ids.insert(v);
      }
    } catch (const std::logic_error&) {
      throw ModelError("malformed activity range '" + part + "'");
    }
  }
  if (ids.empty()) throw ModelError("empty activity range");
  return {ids.begin(), ids.end()};
}

}  // namespace metasched
