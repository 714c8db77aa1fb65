#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metasched/model.hpp"
#include "metasched/operators.hpp"
#include "metasched/rcpsp.hpp"
#include "metasched/rng.hpp"
#include "metasched/tctp.hpp"

namespace metasched::search {

/// Permutation of activity ids (RCPSP) or 1-based option indices (TCTP).
using Candidate = std::vector<int>;

enum class Representation { ActivityList, OptionVector };

struct Fitness {
  /// Minimized score: makespan for RCPSP, total cost for TCTP.
  double value = 0.0;
  int duration = 0;
  /// Direct cost for TCTP, zero for RCPSP.
  Money cost = 0;

  friend bool operator==(const Fitness&, const Fitness&) = default;
};

/// A neighborhood move. For activity lists `position` is the left index of
/// an adjacent swap and `value` is unused; for option vectors `position`
/// is the activity index and `value` the new option.
struct Move {
  std::size_t position = 0;
  int value = 0;
};

/// Tabu key. Swaps use the unordered id pair (low, high); option changes
/// use (activity index, option).
struct MoveAttribute {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const MoveAttribute&, const MoveAttribute&) = default;
};

class SearchProblem {
public:
  SearchProblem() = default;
  SearchProblem(const SearchProblem&) = delete;
  SearchProblem& operator=(const SearchProblem&) = delete;
  virtual ~SearchProblem() = default;

  [[nodiscard]] virtual Representation representation() const = 0;
  [[nodiscard]] virtual std::string_view name() const = 0;
  [[nodiscard]] virtual std::size_t length() const = 0;

  /// Deterministic; thread-safe.
  [[nodiscard]] virtual Fitness evaluate(const Candidate& c) const = 0;
  [[nodiscard]] virtual bool feasible(const Candidate& c) const = 0;

  [[nodiscard]] virtual Candidate random_candidate(Rng& rng) const = 0;
  [[nodiscard]] virtual Candidate neighbor(const Candidate& c, Rng& rng) const = 0;

  /// Full neighborhood of `c`.
  [[nodiscard]] virtual std::vector<Move> moves(const Candidate& c) const = 0;
  [[nodiscard]] virtual Candidate apply(const Candidate& c, const Move& m) const = 0;
  /// Attribute the move introduces; the move is tabu if this is on the list.
  [[nodiscard]] virtual MoveAttribute introduced(const Candidate& c, const Move& m) const = 0;
  /// Attribute to forbid after the move: undoing it would reintroduce this.
  [[nodiscard]] virtual MoveAttribute reversal(const Candidate& c, const Move& m) const = 0;

  [[nodiscard]] virtual Candidate crossover(const Candidate& a, const Candidate& b, Rng& rng) const = 0;
  /// Per-gene mutation with probability `rate`.
  [[nodiscard]] virtual Candidate mutate(const Candidate& c, double rate, Rng& rng) const = 0;
};

/// Precedence-feasible activity lists decoded by the serial SGS.
class RcpspProblem final : public SearchProblem {
public:
  RcpspProblem(ProjectNetwork net, int capacity);

  [[nodiscard]] Representation representation() const override { return Representation::ActivityList; }
  [[nodiscard]] std::string_view name() const override { return "rcpsp"; }
  [[nodiscard]] std::size_t length() const override { return net_.size(); }
  [[nodiscard]] Fitness evaluate(const Candidate& c) const override;
  [[nodiscard]] bool feasible(const Candidate& c) const override;
  [[nodiscard]] Candidate random_candidate(Rng& rng) const override;
  [[nodiscard]] Candidate neighbor(const Candidate& c, Rng& rng) const override;
  [[nodiscard]] std::vector<Move> moves(const Candidate& c) const override;
  [[nodiscard]] Candidate apply(const Candidate& c, const Move& m) const override;
  [[nodiscard]] MoveAttribute introduced(const Candidate& c, const Move& m) const override;
  [[nodiscard]] MoveAttribute reversal(const Candidate& c, const Move& m) const override;
  [[nodiscard]] Candidate crossover(const Candidate& a, const Candidate& b, Rng& rng) const override;
  [[nodiscard]] Candidate mutate(const Candidate& c, double rate, Rng& rng) const override;

  [[nodiscard]] const ProjectNetwork& network() const noexcept { return net_; }
  [[nodiscard]] int capacity() const noexcept { return capacity_; }

private:
  ProjectNetwork net_;
  int capacity_;
  PrecedenceIndex prec_;
  rcpsp::SerialDecoder decoder_;
};

/// Option vectors scored by duration * I + direct cost.
class TctpProblem final : public SearchProblem {
public:
  TctpProblem(TctpInstance instance, Money indirect_per_day);

  [[nodiscard]] Representation representation() const override { return Representation::OptionVector; }
  [[nodiscard]] std::string_view name() const override { return "tctp"; }
  [[nodiscard]] std::size_t length() const override { return instance_.size(); }
  [[nodiscard]] Fitness evaluate(const Candidate& c) const override;
  [[nodiscard]] bool feasible(const Candidate& c) const override;
  [[nodiscard]] Candidate random_candidate(Rng& rng) const override;
  [[nodiscard]] Candidate neighbor(const Candidate& c, Rng& rng) const override;
  [[nodiscard]] std::vector<Move> moves(const Candidate& c) const override;
  [[nodiscard]] Candidate apply(const Candidate& c, const Move& m) const override;
  [[nodiscard]] MoveAttribute introduced(const Candidate& c, const Move& m) const override;
  [[nodiscard]] MoveAttribute reversal(const Candidate& c, const Move& m) const override;
  [[nodiscard]] Candidate crossover(const Candidate& a, const Candidate& b, Rng& rng) const override;
  [[nodiscard]] Candidate mutate(const Candidate& c, double rate, Rng& rng) const override;

  [[nodiscard]] const TctpInstance& instance() const noexcept { return instance_; }
  [[nodiscard]] Money indirect_per_day() const noexcept { return indirect_; }

private:
  TctpInstance instance_;
  Money indirect_;
};

enum class Algorithm { SimulatedAnnealing, TabuSearch, Genetic };

std::string_view short_name(Algorithm a);
std::string_view display_name(Algorithm a);
/// Accepts "sa", "ts", "ga". Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);

struct SaConfig {
  /// Calibrated from sampled worsening moves when unset.
  std::optional<double> initial_temperature;
  double cooling_factor = 0.95;
  int steps_per_temperature = 50;
  /// Mean acceptance probability targeted by the calibration.
  double calibration_acceptance = 0.8;
  int calibration_samples = 100;
  std::size_t max_evaluations = 20000;

  void validate() const;
};

struct TsConfig {
  int tabu_tenure = 7;
  /// 0 means the full neighborhood.
  std::size_t neighborhood_sample = 0;
  /// Iterations without a new global best before one diversifying move.
  int stagnation_limit = 20;
  std::size_t max_evaluations = 20000;
  /// Keep a per-iteration move log in the result.
  bool record_moves = false;

  void validate() const;
};

struct GaConfig {
  std::size_t population_size = 50;
  double crossover_rate = 0.9;
  /// Per-gene; 1/n when unset.
  std::optional<double> mutation_rate;
  std::size_t tournament_size = 2;
  std::size_t elitism_count = 1;
  std::size_t max_evaluations = 20000;

  void validate() const;
};

struct TrajectoryPoint {
  std::size_t evaluation = 0;
  double best_fitness = 0.0;
  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct TabuMoveRecord {
  std::size_t iteration = 0;
  /// Attribute the chosen move introduced.
  MoveAttribute attribute;
  /// Attribute made tabu by the move.
  MoveAttribute reversal;
  bool tabu = false;
  bool aspiration = false;
  bool diversification = false;
  friend bool operator==(const TabuMoveRecord&, const TabuMoveRecord&) = default;
};

struct RunResult {
  Algorithm algorithm = Algorithm::SimulatedAnnealing;
  std::uint64_t seed = 0;
  Candidate best;
  Fitness best_fitness;
  std::size_t evaluations_used = 0;
  /// GA generations, SA steps, TS moves.
  std::size_t native_iterations = 0;
  /// Evaluation index (1-based) at which the final best was first reached.
  std::size_t evaluations_to_best = 0;
  /// Best-so-far after every evaluation.
  std::vector<TrajectoryPoint> trajectory;
  /// Non-dominated (duration, cost) among every evaluated candidate.
  tctp::ParetoArchive archive;
  /// Evaluated candidates failing the feasibility predicate (always 0).
  std::size_t infeasible_evaluations = 0;
  std::vector<TabuMoveRecord> move_log;
  /// SA only: the starting temperature actually used.
  double initial_temperature = 0.0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// 1 for improving or neutral moves, exp(-delta / temperature) otherwise.
/// Throws std::invalid_argument for a non-positive temperature.
double sa_accept_probability(double delta, double temperature);

RunResult run_sa(const SearchProblem& problem, const SaConfig& config, std::uint64_t seed);
RunResult run_ts(const SearchProblem& problem, const TsConfig& config, std::uint64_t seed);
RunResult run_ga(const SearchProblem& problem, const GaConfig& config, std::uint64_t seed);

struct AlgorithmConfigs {
  SaConfig sa;
  TsConfig ts;
  GaConfig ga;

  /// Sets the evaluation budget of all three.
  void set_budget(std::size_t max_evaluations);
};

RunResult run(Algorithm algorithm, const SearchProblem& problem, const AlgorithmConfigs& configs,
              std::uint64_t seed);

}  // namespace metasched::search
