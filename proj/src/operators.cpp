#include "metasched/operators.hpp"

#include <algorithm>
#include <limits>

namespace metasched::search {

namespace {

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

}  // namespace

PrecedenceIndex::PrecedenceIndex(const ProjectNetwork& net) : net_(&net) {
  ActivityId max_id = 0;
  for (const auto& a : net.activities()) max_id = std::max(max_id, a.id);
  slot_.assign(static_cast<std::size_t>(max_id) + 1, kAbsent);
  for (std::size_t i = 0; i < net.size(); ++i) slot_[net.activity(i).id] = i;
  const std::size_t n = net.size();
  matrix_.assign(n * n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t p : net.predecessor_indices(v)) matrix_[p * n + v] = 1;
}

std::size_t PrecedenceIndex::position(ActivityId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= slot_.size() || slot_[id] == kAbsent)
    throw ModelError("unknown activity id " + std::to_string(id));
  return slot_[id];
}

bool PrecedenceIndex::precedes(ActivityId before, ActivityId after) const {
  return matrix_[position(before) * net_->size() + position(after)] != 0;
}

std::vector<ActivityId> order_crossover_raw(std::span<const ActivityId> parent1, std::span<const ActivityId> parent2,
                                            std::size_t cut1, std::size_t cut2) {
  const std::size_t n = parent1.size();
  if (parent2.size() != n) throw ModelError("order crossover: parents differ in length");
  if (cut1 > cut2 || cut2 > n) throw ModelError("order crossover: cuts must satisfy 0 <= cut1 <= cut2 <= length");
  std::vector<ActivityId> a(parent1.begin(), parent1.end()), b(parent2.begin(), parent2.end());
  std::ranges::sort(a);
  std::ranges::sort(b);
  if (a != b || std::ranges::adjacent_find(a) != a.end())
    throw ModelError("order crossover: parents are not permutations of the same id set");

  std::vector<ActivityId> child(n);
  std::vector<ActivityId> kept(parent1.begin() + cut1, parent1.begin() + cut2);
  std::ranges::sort(kept);
  std::copy(parent1.begin() + cut1, parent1.begin() + cut2, child.begin() + cut1);

  std::size_t pos = 0;
  for (ActivityId id : parent2) {
    if (std::ranges::binary_search(kept, id)) continue;
    if (pos == cut1) pos = cut2;
    child[pos++] = id;
  }
  return child;
}

rcpsp::ActivityList repair_precedence(const ProjectNetwork& net, std::span<const ActivityId> list) {
  const std::size_t n = net.size();
  if (list.size() != n) throw ModelError("repair: list length does not match activity count");
  std::vector<std::size_t> remaining_preds(n);
  for (std::size_t v = 0; v < n; ++v) remaining_preds[v] = net.predecessor_indices(v).size();
  std::vector<std::size_t> order;
  order.reserve(n);
  for (ActivityId id : list) order.push_back(net.index_of(id));

  std::vector<bool> done(n, false);
  rcpsp::ActivityList out;
  out.reserve(n);
  while (out.size() < n) {
    bool progressed = false;
    for (std::size_t v : order) {
      if (done[v] || remaining_preds[v] != 0) continue;
      done[v] = true;
      out.push_back(net.activity(v).id);
      for (std::size_t s : net.successor_indices(v)) --remaining_preds[s];
      progressed = true;
      break;
    }
    if (!progressed) throw ModelError("repair: precedence relation is cyclic");
  }
  return out;
}

rcpsp::ActivityList order_crossover(const ProjectNetwork& net, std::span<const ActivityId> parent1,
                                    std::span<const ActivityId> parent2, std::size_t cut1, std::size_t cut2) {
  return repair_precedence(net, order_crossover_raw(parent1, parent2, cut1, cut2));
}

std::vector<std::size_t> feasible_adjacent_swaps(const PrecedenceIndex& prec, std::span<const ActivityId> list) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < list.size(); ++i)
    if (!prec.precedes(list[i], list[i + 1])) out.push_back(i);
  return out;
}

rcpsp::ActivityList neighbor_swap(const PrecedenceIndex& prec, std::span<const ActivityId> list, Rng& rng) {
  rcpsp::ActivityList out(list.begin(), list.end());
  const auto swaps = feasible_adjacent_swaps(prec, list);
  if (swaps.empty()) return out;
  const std::size_t i = swaps[rng.index(swaps.size())];
  std::swap(out[i], out[i + 1]);
  return out;
}

rcpsp::ActivityList neighbor_swap(const ProjectNetwork& net, std::span<const ActivityId> list, Rng& rng) {
  return neighbor_swap(PrecedenceIndex(net), list, rng);
}

ModeVector neighbor_mode_change(const TctpInstance& instance, const ModeVector& modes, Rng& rng) {
  instance.require_valid(modes);
  std::vector<std::size_t> changeable;
  for (std::size_t i = 0; i < instance.size(); ++i)
    if (instance.option_count(i) > 1) changeable.push_back(i);
  ModeVector out = modes;
  if (changeable.empty()) return out;
  const std::size_t i = changeable[rng.index(changeable.size())];
  const int count = static_cast<int>(instance.option_count(i));
  int pick = rng.between(1, count - 1);
  if (pick >= modes.choices[i]) ++pick;
  out.choices[i] = pick;
  return out;
}

rcpsp::ActivityList random_activity_list(const ProjectNetwork& net, Rng& rng) {
  const std::size_t n = net.size();
  std::vector<std::size_t> remaining(n);
  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < n; ++v) {
    remaining[v] = net.predecessor_indices(v).size();
    if (remaining[v] == 0) eligible.push_back(v);
  }
  rcpsp::ActivityList out;
  out.reserve(n);
  while (!eligible.empty()) {
    const std::size_t k = rng.index(eligible.size());
    const std::size_t v = eligible[k];
    eligible.erase(eligible.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(net.activity(v).id);
    for (std::size_t s : net.successor_indices(v))
      if (--remaining[s] == 0) eligible.push_back(s);
  }
  if (out.size() != n) throw ModelError("precedence relation is cyclic");
  return out;
}

ModeVector random_modes(const TctpInstance& instance, Rng& rng) {
  ModeVector m;
  m.choices.resize(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i)
    m.choices[i] = rng.between(1, static_cast<int>(instance.option_count(i)));
  return m;
}

}  // namespace metasched::search
