#include "metasched/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace metasched::search {

namespace {

/// Budget, best-so-far, trajectory and archive bookkeeping shared by every
/// algorithm. Every fitness computation goes through `evaluate`.
class Evaluator {
public:
  Evaluator(const SearchProblem& problem, std::size_t budget, RunResult& result)
      : problem_(problem), budget_(budget), result_(result) {
    result_.trajectory.reserve(budget);
  }

  [[nodiscard]] bool exhausted() const noexcept { return result_.evaluations_used >= budget_; }
  [[nodiscard]] std::size_t remaining() const noexcept { return budget_ - result_.evaluations_used; }
  [[nodiscard]] double best() const noexcept { return result_.best_fitness.value; }

  Fitness evaluate(const Candidate& c) {
    if (exhausted()) throw std::logic_error("evaluation budget exceeded");
    if (!problem_.feasible(c)) ++result_.infeasible_evaluations;
    const Fitness f = problem_.evaluate(c);
    ++result_.evaluations_used;
    if (result_.evaluations_used == 1 || f.value < result_.best_fitness.value) {
      result_.best = c;
      result_.best_fitness = f;
      result_.evaluations_to_best = result_.evaluations_used;
    }
    result_.trajectory.push_back({result_.evaluations_used, result_.best_fitness.value});
    result_.archive.insert({f.duration, f.cost, c});
    return f;
  }

private:
  const SearchProblem& problem_;
  std::size_t budget_;
  RunResult& result_;
};

RunResult start(Algorithm algorithm, std::uint64_t seed) {
  RunResult r;
  r.algorithm = algorithm;
  r.seed = seed;
  return r;
}

// Solve mean(exp(-d / T)) = target for T by bisection on log T.
double calibrate_temperature(const std::vector<double>& deltas, double target) {
  if (deltas.empty()) return 1.0;
  auto mean_acceptance = [&](double t) {
    double s = 0.0;
    for (double d : deltas) s += std::exp(-d / t);
    return s / static_cast<double>(deltas.size());
  };
  double lo = std::log(1e-9), hi = std::log(1e15);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mean_acceptance(std::exp(mid)) < target) lo = mid;
    else hi = mid;
  }
  return std::exp(hi);
}

}  // namespace

std::string_view short_name(Algorithm a) {
  switch (a) {
    case Algorithm::SimulatedAnnealing: return "sa";
    case Algorithm::TabuSearch: return "ts";
    case Algorithm::Genetic: return "ga";
  }
  return "?";
}

std::string_view display_name(Algorithm a) {
  switch (a) {
    case Algorithm::SimulatedAnnealing: return "Simulated Annealing";
    case Algorithm::TabuSearch: return "Tabu Search";
    case Algorithm::Genetic: return "Genetic Algorithm";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "sa") return Algorithm::SimulatedAnnealing;
  if (text == "ts") return Algorithm::TabuSearch;
  if (text == "ga") return Algorithm::Genetic;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected sa, ts or ga)");
}

void SaConfig::validate() const {
  if (initial_temperature && !(*initial_temperature > 0.0))
    throw std::invalid_argument("SA initial temperature must be positive");
  if (!(cooling_factor > 0.0 && cooling_factor < 1.0)) throw std::invalid_argument("SA cooling factor must be in (0,1)");
  if (steps_per_temperature < 1) throw std::invalid_argument("SA steps per temperature must be positive");
  if (!(calibration_acceptance > 0.0 && calibration_acceptance < 1.0))
    throw std::invalid_argument("SA calibration acceptance must be in (0,1)");
  if (calibration_samples < 1) throw std::invalid_argument("SA calibration samples must be positive");
  if (max_evaluations < 1) throw std::invalid_argument("max evaluations must be positive");
}

void TsConfig::validate() const {
  if (tabu_tenure < 1) throw std::invalid_argument("TS tabu tenure must be positive");
  if (stagnation_limit < 1) throw std::invalid_argument("TS stagnation limit must be positive");
  if (max_evaluations < 1) throw std::invalid_argument("max evaluations must be positive");
}

void GaConfig::validate() const {
  if (population_size < 1) throw std::invalid_argument("GA population size must be positive");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw std::invalid_argument("GA crossover rate must be in [0,1]");
  if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0))
    throw std::invalid_argument("GA mutation rate must be in [0,1]");
  if (tournament_size < 2) throw std::invalid_argument("GA tournament size must be at least 2");
  if (elitism_count >= population_size) throw std::invalid_argument("GA elitism count must be below population size");
  if (max_evaluations < 1) throw std::invalid_argument("max evaluations must be positive");
}

void AlgorithmConfigs::set_budget(std::size_t max_evaluations) {
  sa.max_evaluations = ts.max_evaluations = ga.max_evaluations = max_evaluations;
}

double sa_accept_probability(double delta, double temperature) {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be positive");
  if (delta <= 0.0) return 1.0;
  return std::exp(-delta / temperature);
}

RunResult run_sa(const SearchProblem& problem, const SaConfig& config, std::uint64_t seed) {
  config.validate();
  RunResult result = start(Algorithm::SimulatedAnnealing, seed);
  Rng rng(seed);
  Evaluator eval(problem, config.max_evaluations, result);

  Candidate current = problem.random_candidate(rng);
  if (!problem.feasible(current)) throw ModelError("no feasible candidate could be constructed");
  double current_fitness = eval.evaluate(current).value;

  double temperature;
  if (config.initial_temperature) {
    temperature = *config.initial_temperature;
  } else {
    // Random walk from the start point, collecting worsening deltas. The
    // walk's evaluations count against the budget like any other.
    std::vector<double> worsening;
    Candidate walker = current;
    double walker_fitness = current_fitness;
    const std::size_t cap = std::min(eval.remaining(), config.max_evaluations / 10);
    for (std::size_t i = 0; i < cap && worsening.size() < static_cast<std::size_t>(config.calibration_samples); ++i) {
      Candidate next = problem.neighbor(walker, rng);
      const double f = eval.evaluate(next).value;
      if (f > walker_fitness) worsening.push_back(f - walker_fitness);
      walker = std::move(next);
      walker_fitness = f;
    }
    temperature = calibrate_temperature(worsening, config.calibration_acceptance);
  }
  result.initial_temperature = temperature;

  std::size_t steps = 0;
  while (!eval.exhausted()) {
    Candidate next = problem.neighbor(current, rng);
    const double f = eval.evaluate(next).value;
    const double delta = f - current_fitness;
    if (delta <= 0.0 || rng.uniform() < sa_accept_probability(delta, temperature)) {
      current = std::move(next);
      current_fitness = f;
    }
    ++steps;
    if (steps % static_cast<std::size_t>(config.steps_per_temperature) == 0) temperature = std::max(temperature * config.cooling_factor, std::numeric_limits<double>::min());
  }
  result.native_iterations = steps;
  return result;
}

RunResult run_ts(const SearchProblem& problem, const TsConfig& config, std::uint64_t seed) {
  config.validate();
  RunResult result = start(Algorithm::TabuSearch, seed);
  Rng rng(seed);
  Evaluator eval(problem, config.max_evaluations, result);

  Candidate current = problem.random_candidate(rng);
  if (!problem.feasible(current)) throw ModelError("no feasible candidate could be constructed");
  eval.evaluate(current);

  std::map<MoveAttribute, std::size_t> tabu_until;  // attribute -> last iteration it stays tabu
  std::map<MoveAttribute, std::size_t> frequency;
  std::size_t iteration = 0;
  int stagnation = 0;

  struct Scored {
    Move move;
    MoveAttribute attribute;
    double fitness;
    bool tabu;
    std::size_t uses;
  };

  while (!eval.exhausted()) {
    std::vector<Move> moves = problem.moves(current);
    if (moves.empty()) break;
    if (config.neighborhood_sample > 0 && config.neighborhood_sample < moves.size()) {
      for (std::size_t i = 0; i < config.neighborhood_sample; ++i)
        std::swap(moves[i], moves[i + rng.index(moves.size() - i)]);
      moves.resize(config.neighborhood_sample);
    }

    ++iteration;
    const double best_before = eval.best();
    std::vector<Scored> scored;
    scored.reserve(moves.size());
    for (const Move& m : moves) {
      if (eval.exhausted()) break;
      const MoveAttribute attr = problem.introduced(current, m);
      auto t = tabu_until.find(attr);
      const bool is_tabu = t != tabu_until.end() && t->second >= iteration;
      auto fq = frequency.find(attr);
      scored.push_back({m, attr, eval.evaluate(problem.apply(current, m)).value, is_tabu,
                        fq == frequency.end() ? 0 : fq->second});
    }

    const bool diversify = stagnation >= config.stagnation_limit;
    const Scored* chosen = nullptr;
    bool aspiration = false;
    for (const Scored& s : scored) {
      const bool aspires = s.tabu && s.fitness < best_before;
      if (s.tabu && !aspires) continue;
      if (!chosen) {
        chosen = &s;
        aspiration = aspires;
        continue;
      }
      // Diversification ranks by how rarely the attribute was introduced;
      // an aspiring move always wins on fitness.
      bool better;
      if (diversify && !aspires && !aspiration)
        better = s.uses < chosen->uses || (s.uses == chosen->uses && s.fitness < chosen->fitness);
      else
        better = s.fitness < chosen->fitness;
      if (better) {
        chosen = &s;
        aspiration = aspires;
      }
    }

    if (!chosen) {
      // Every sampled move is tabu without aspiration: hold position while
      // the tenures run down.
      ++stagnation;
      continue;
    }

    const MoveAttribute reversal = problem.reversal(current, chosen->move);
    if (config.record_moves)
      result.move_log.push_back({iteration, chosen->attribute, reversal, chosen->tabu, aspiration, diversify});
    tabu_until[reversal] = iteration + static_cast<std::size_t>(config.tabu_tenure);
    ++frequency[chosen->attribute];
    current = problem.apply(current, chosen->move);
    ++result.native_iterations;

    if (eval.best() < best_before) stagnation = 0;
    else if (diversify) stagnation = 0;
    else ++stagnation;
  }
  return result;
}

RunResult run_ga(const SearchProblem& problem, const GaConfig& config, std::uint64_t seed) {
  config.validate();
  RunResult result = start(Algorithm::Genetic, seed);
  Rng rng(seed);
  Evaluator eval(problem, config.max_evaluations, result);
  const double mutation_rate =
      config.mutation_rate.value_or(problem.length() > 0 ? 1.0 / static_cast<double>(problem.length()) : 0.0);

  struct Individual {
    Candidate genes;
    double fitness;
  };
  std::vector<Individual> population;
  population.reserve(config.population_size);
  while (population.size() < config.population_size && !eval.exhausted()) {
    Candidate c = problem.random_candidate(rng);
    if (!problem.feasible(c)) throw ModelError("no feasible candidate could be constructed");
    const double f = eval.evaluate(c).value;
    population.push_back({std::move(c), f});
  }

  auto tournament = [&]() -> const Individual& {
    const Individual* winner = &population[rng.index(population.size())];
    for (std::size_t k = 1; k < config.tournament_size; ++k) {
      const Individual& rival = population[rng.index(population.size())];
      if (rival.fitness < winner->fitness) winner = &rival;
    }
    return *winner;
  };

  while (!eval.exhausted() && population.size() == config.population_size) {
    std::vector<std::size_t> ranking(population.size());
    std::iota(ranking.begin(), ranking.end(), std::size_t{0});
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](std::size_t a, std::size_t b) { return population[a].fitness < population[b].fitness; });

    std::vector<Individual> next;
    next.reserve(config.population_size);
    for (std::size_t e = 0; e < config.elitism_count; ++e) next.push_back(population[ranking[e]]);

    while (next.size() < config.population_size && !eval.exhausted()) {
      const Individual& a = tournament();
      const Individual& b = tournament();
      Candidate child = rng.chance(config.crossover_rate) ? problem.crossover(a.genes, b.genes, rng) : a.genes;
      child = problem.mutate(child, mutation_rate, rng);
      const double f = eval.evaluate(child).value;
      next.push_back({std::move(child), f});
    }
    if (next.size() < config.population_size) break;  // budget ran out mid-generation
    population = std::move(next);
    ++result.native_iterations;
  }
  return result;
}

RunResult run(Algorithm algorithm, const SearchProblem& problem, const AlgorithmConfigs& configs,
              std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::SimulatedAnnealing: return run_sa(problem, configs.sa, seed);
    case Algorithm::TabuSearch: return run_ts(problem, configs.ts, seed);
    case Algorithm::Genetic: return run_ga(problem, configs.ga, seed);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace metasched::search
