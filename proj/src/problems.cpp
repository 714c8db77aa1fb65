#include <algorithm>

#include "metasched/cpm.hpp"
#include "metasched/search.hpp"

namespace metasched::search {

RcpspProblem::RcpspProblem(ProjectNetwork net, int capacity)
    : net_(std::move(net)), capacity_(capacity), prec_(net_), decoder_(net_, capacity) {
  (void)net_.topological_order();
}

Fitness RcpspProblem::evaluate(const Candidate& c) const {
  std::vector<std::size_t> order;
  order.reserve(c.size());
  for (int id : c) order.push_back(prec_.position(id));
  std::vector<int> starts;
  const int span = decoder_.decode(order, starts);
  return {static_cast<double>(span), span, 0};
}

bool RcpspProblem::feasible(const Candidate& c) const { return rcpsp::is_precedence_feasible(net_, c); }

Candidate RcpspProblem::random_candidate(Rng& rng) const { return random_activity_list(net_, rng); }

Candidate RcpspProblem::neighbor(const Candidate& c, Rng& rng) const { return neighbor_swap(prec_, c, rng); }

std::vector<Move> RcpspProblem::moves(const Candidate& c) const {
  std::vector<Move> out;
  for (std::size_t i : feasible_adjacent_swaps(prec_, c)) out.push_back({i, 0});
  return out;
}

Candidate RcpspProblem::apply(const Candidate& c, const Move& m) const {
  Candidate out = c;
  std::swap(out[m.position], out[m.position + 1]);
  return out;
}

MoveAttribute RcpspProblem::introduced(const Candidate& c, const Move& m) const {
  const int a = c[m.position], b = c[m.position + 1];
  return {std::min(a, b), std::max(a, b)};
}

MoveAttribute RcpspProblem::reversal(const Candidate& c, const Move& m) const { return introduced(c, m); }

Candidate RcpspProblem::crossover(const Candidate& a, const Candidate& b, Rng& rng) const {
  const std::size_t n = a.size();
  const std::size_t cut1 = rng.index(n);
  const std::size_t cut2 = cut1 + 1 + rng.index(n - cut1);
  return order_crossover(net_, a, b, cut1, cut2);
}

Candidate RcpspProblem::mutate(const Candidate& c, double rate, Rng& rng) const {
  Candidate out = c;
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (rng.chance(rate) && !prec_.precedes(out[i], out[i + 1])) std::swap(out[i], out[i + 1]);
  return out;
}

TctpProblem::TctpProblem(TctpInstance instance, Money indirect_per_day)
    : instance_(std::move(instance)), indirect_(indirect_per_day) {
  if (indirect_ < 0) throw ModelError("indirect cost must be non-negative");
  (void)instance_.network().topological_order();
}

Fitness TctpProblem::evaluate(const Candidate& c) const {
  const std::size_t n = instance_.size();
  if (c.size() != n) throw ModelError("mode vector length does not match activity count");
  std::vector<int> durations(n);
  Money direct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& opts = instance_.options(i);
    if (c[i] < 1 || static_cast<std::size_t>(c[i]) > opts.size())
      throw ModelError("invalid option index " + std::to_string(c[i]));
    durations[i] = opts[c[i] - 1].duration;
    direct += opts[c[i] - 1].direct_cost;
  }
  const int span = cpm::makespan(instance_.network(), durations);
  const Money total = static_cast<Money>(span) * indirect_ + direct;
  return {static_cast<double>(total), span, direct};
}

bool TctpProblem::feasible(const Candidate& c) const { return instance_.is_valid(ModeVector{c}); }

Candidate TctpProblem::random_candidate(Rng& rng) const { return random_modes(instance_, rng).choices; }

Candidate TctpProblem::neighbor(const Candidate& c, Rng& rng) const {
  return neighbor_mode_change(instance_, ModeVector{c}, rng).choices;
}

std::vector<Move> TctpProblem::moves(const Candidate& c) const {
  std::vector<Move> out;
  for (std::size_t i = 0; i < instance_.size(); ++i) {
    const int count = static_cast<int>(instance_.option_count(i));
    for (int o = 1; o <= count; ++o)
      if (o != c[i]) out.push_back({i, o});
  }
  return out;
}

Candidate TctpProblem::apply(const Candidate& c, const Move& m) const {
  Candidate out = c;
  out[m.position] = m.value;
  return out;
}

MoveAttribute TctpProblem::introduced(const Candidate&, const Move& m) const {
  return {static_cast<int>(m.position), m.value};
}

MoveAttribute TctpProblem::reversal(const Candidate& c, const Move& m) const {
  return {static_cast<int>(m.position), c[m.position]};
}

Candidate TctpProblem::crossover(const Candidate& a, const Candidate& b, Rng& rng) const {
  Candidate out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = rng.chance(0.5) ? a[i] : b[i];
  return out;
}

Candidate TctpProblem::mutate(const Candidate& c, double rate, Rng& rng) const {
  Candidate out = c;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int count = static_cast<int>(instance_.option_count(i));
    if (count < 2 || !rng.chance(rate)) continue;
    int pick = rng.between(1, count - 1);
    if (pick >= out[i]) ++pick;
    out[i] = pick;
  }
  return out;
}

}  // namespace metasched::search
