#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "metasched/model.hpp"
#include "metasched/search.hpp"
#include "metasched/tctp.hpp"

namespace metasched::bench {

enum class ProblemKind { Rcpsp, Tctp };

struct ExperimentSpec {
  ProblemKind kind = ProblemKind::Tctp;
  /// Bundled instance name or file path.
  std::string instance;
  /// Optional restriction to an induced sub-instance.
  std::vector<ActivityId> activities;
  /// RCPSP only.
  int capacity = 0;
  /// TCTP only. Every (algorithm, seed, indirect cost) triple is one run.
  std::vector<Money> indirect_costs;
  std::vector<search::Algorithm> algorithms{search::Algorithm::SimulatedAnnealing, search::Algorithm::TabuSearch,
                                            search::Algorithm::Genetic};
  std::vector<std::uint64_t> seeds;
  std::size_t max_evaluations = 20000;
  search::AlgorithmConfigs configs;
  /// Worker threads; the report does not depend on it.
  std::size_t threads = 1;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

struct RunRecord {
  search::Algorithm algorithm = search::Algorithm::SimulatedAnnealing;
  std::uint64_t seed = 0;
  std::optional<Money> indirect_cost;
  search::Candidate best;
  /// Makespan for RCPSP, total cost for TCTP.
  double fitness = 0.0;
  int duration = 0;
  Money direct_cost = 0;
  std::size_t evaluations_used = 0;
  std::size_t native_iterations = 0;
  std::size_t evaluations_to_best = 0;
  tctp::ParetoArchive archive;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Table-shaped statistics for one algorithm at one indirect cost.
struct AlgorithmSummary {
  search::Algorithm algorithm = search::Algorithm::SimulatedAnnealing;
  std::optional<Money> indirect_cost;
  std::size_t runs = 0;
  // Best run (lowest fitness, earliest seed on ties).
  std::uint64_t best_seed = 0;
  int min_duration = 0;
  double min_cost = 0.0;
  std::size_t min_run_iterations = 0;
  std::size_t min_run_evaluations = 0;
  // Means over every run.
  double avg_duration = 0.0;
  double avg_cost = 0.0;
  double avg_iterations = 0.0;
  double avg_evaluations_to_best = 0.0;
  /// Share of this group's runs within 1% of the best fitness any algorithm
  /// reached at the same indirect cost.
  double within_one_percent = 0.0;

  friend bool operator==(const AlgorithmSummary&, const AlgorithmSummary&) = default;
};

struct PooledPoint {
  int duration = 0;
  Money cost = 0;
  std::vector<int> encoding;
  std::vector<search::Algorithm> contributors;
  friend bool operator==(const PooledPoint&, const PooledPoint&) = default;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::vector<RunRecord> runs;
  std::vector<AlgorithmSummary> summaries;
  std::vector<PooledPoint> pooled_front;
  std::map<search::Algorithm, double> success_percent;
  /// Per algorithm, the front merged over its own runs.
  std::map<search::Algorithm, tctp::ParetoArchive> algorithm_fronts;
};

ExperimentReport run_experiment(const ExperimentSpec& spec);

/// Share of pooled-front points each algorithm attains, ties split evenly.
/// Throws std::invalid_argument on an empty front.
std::map<search::Algorithm, double> success_percentage(const std::vector<RunRecord>& runs,
                                                       const tctp::ParetoArchive& pooled_front);

std::string front_csv(const ExperimentReport& report);
std::string summary_csv(const ExperimentReport& report);
nlohmann::json report_json(const ExperimentReport& report);

/// Writes front.csv. Throws std::runtime_error if the file cannot be written.
void export_front_csv(const ExperimentReport& report, const std::filesystem::path& destination);

/// Writes report.json, summary.csv and front.csv into `directory`.
void write_report(const ExperimentReport& report, const std::filesystem::path& directory);

ExperimentSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

/// Reads `sa`, `ts` and `ga` sections over `base`; unknown keys throw.
search::AlgorithmConfigs configs_from_json(const nlohmann::json& doc, search::AlgorithmConfigs base = {});
nlohmann::json configs_to_json(const search::AlgorithmConfigs& configs);

}  // namespace metasched::bench
