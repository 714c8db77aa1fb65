#include <doctest.h>

#include <filesystem>

#include <nlohmann/json.hpp>

#include "metasched/bench.hpp"
#include "support.hpp"

using namespace metasched;
using namespace metasched::bench;
using search::Algorithm;

namespace {

RunRecord record(Algorithm a, std::initializer_list<std::pair<int, Money>> pts) {
  RunRecord r;
  r.algorithm = a;
  for (auto [d, c] : pts) r.archive.insert({d, c, {}});
  return r;
}

tctp::ParetoArchive front5() {
  tctp::ParetoArchive f;
  for (int k = 0; k < 5; ++k) f.insert({10 + k, 100 - k, {}});
  return f;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("metasched_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("success percentage examples") {
  const auto front = front5();
  {
    const std::vector<RunRecord> runs{record(Algorithm::Genetic, {{10, 100}, {11, 99}, {12, 98}, {13, 97}, {14, 96}}),
                                      record(Algorithm::TabuSearch, {{9, 200}})};
    const auto s = success_percentage(runs, front);
    CHECK(s.at(Algorithm::Genetic) == doctest::Approx(100.0));
    CHECK(s.at(Algorithm::TabuSearch) == doctest::Approx(0.0));
  }
  {
    tctp::ParetoArchive two;
    two.insert({1, 2, {}});
    two.insert({2, 1, {}});
    const std::vector<RunRecord> runs{record(Algorithm::Genetic, {{1, 2}}), record(Algorithm::TabuSearch, {{2, 1}})};
    const auto s = success_percentage(runs, two);
    CHECK(s.at(Algorithm::Genetic) == doctest::Approx(50.0));
    CHECK(s.at(Algorithm::TabuSearch) == doctest::Approx(50.0));
  }
  {
    const std::vector<RunRecord> runs{record(Algorithm::SimulatedAnnealing, {{10, 100}, {11, 99}, {12, 98}}),
                                      record(Algorithm::TabuSearch, {{13, 97}}),
                                      record(Algorithm::Genetic, {{14, 96}})};
    const auto s = success_percentage(runs, front);
    CHECK(s.at(Algorithm::SimulatedAnnealing) == doctest::Approx(60.0));
    CHECK(s.at(Algorithm::TabuSearch) == doctest::Approx(20.0));
    CHECK(s.at(Algorithm::Genetic) == doctest::Approx(20.0));
  }
  CHECK_THROWS_AS(success_percentage({}, tctp::ParetoArchive{}), std::invalid_argument);
}

TEST_CASE("shared points split their credit") {
  tctp::ParetoArchive one;
  one.insert({5, 5, {}});
  const std::vector<RunRecord> runs{record(Algorithm::Genetic, {{5, 5}}), record(Algorithm::TabuSearch, {{5, 5}})};
  const auto s = success_percentage(runs, one);
  CHECK(s.at(Algorithm::Genetic) == doctest::Approx(50.0));
  CHECK(s.at(Algorithm::TabuSearch) == doctest::Approx(50.0));
}

TEST_CASE("front export") {
  ExperimentReport report;
  report.pooled_front = {{169, 99740, {5}, {Algorithm::Genetic}},
                         {100, 169820, {1}, {Algorithm::SimulatedAnnealing, Algorithm::TabuSearch}}};
  const auto csv = front_csv(report);
  CHECK(csv == "algorithm,duration,cost,modes_or_list\nsa|ts,100,169820,1\nga,169,99740,5\n");
  CHECK(front_csv(ExperimentReport{}) == "algorithm,duration,cost,modes_or_list\n");

  const auto dir = scratch("export");
  std::filesystem::create_directories(dir);
  export_front_csv(report, dir / "a.csv");
  export_front_csv(report, dir / "b.csv");
  CHECK(testsupport::read_text((dir / "a.csv").string()) == csv);
  CHECK(testsupport::read_text((dir / "a.csv").string()) == testsupport::read_text((dir / "b.csv").string()));
  CHECK_THROWS_AS(export_front_csv(report, dir / "missing" / "x.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unconstrained experiment reports 126 for every algorithm") {
  ExperimentSpec spec;
  spec.kind = ProblemKind::Rcpsp;
  spec.instance = "table1";
  spec.capacity = 17;
  spec.seeds = {1, 2, 3};
  spec.max_evaluations = 1000;
  const auto report = run_experiment(spec);
  REQUIRE(report.summaries.size() == 3);
  for (const auto& s : report.summaries) CHECK(s.min_duration == 126);
  CHECK(report.runs.size() == 9);
}

TEST_CASE("zero indirect cost experiment reaches the cheap extreme") {
  ExperimentSpec spec;
  spec.instance = "table2";
  spec.indirect_costs = {0};
  for (std::uint64_t s = 1; s <= 10; ++s) spec.seeds.push_back(s);
  const auto report = run_experiment(spec);
  bool found = false;
  for (const auto& p : report.pooled_front) found |= p.duration == 169 && p.cost == 99740;
  CHECK(found);
  double total = 0;
  for (const auto& [a, v] : report.success_percent) total += v;
  CHECK(total == doctest::Approx(100.0));
}

TEST_CASE("reports are reproducible and independent of threads") {
  ExperimentSpec spec;
  spec.instance = "table2";
  spec.activities = parse_id_ranges("1-6");
  spec.indirect_costs = {0, 1000};
  spec.seeds = {7};
  spec.max_evaluations = 2000;
  const auto a = run_experiment(spec);
  spec.threads = 4;
  const auto b = run_experiment(spec);
  CHECK(a.runs == b.runs);
  CHECK(a.summaries == b.summaries);
  CHECK(a.pooled_front == b.pooled_front);
  CHECK(summary_csv(a) == summary_csv(b));

  const auto d1 = scratch("r1"), d2 = scratch("r2");
  write_report(a, d1);
  write_report(b, d2);
  for (const char* f : {"report.json", "summary.csv", "front.csv"})
    CHECK(testsupport::read_text((d1 / f).string()) == testsupport::read_text((d2 / f).string()));
  std::filesystem::remove_all(d1);
  std::filesystem::remove_all(d2);
}

TEST_CASE("spec json") {
  const auto doc = nlohmann::json::parse(R"({
    "problem": {"type": "tctp", "instance": "table2", "activities": "1-6", "indirect_costs": [0, 10]},
    "algorithms": ["ga", "ts"], "base_seed": 3, "runs": 4, "max_evaluations": 500,
    "config": {"ga": {"population_size": 20}, "ts": {"neighborhood_sample": "full", "tabu_tenure": 5}}
  })");
  const auto spec = spec_from_json(doc);
  CHECK(spec.kind == ProblemKind::Tctp);
  CHECK(spec.activities.size() == 6);
  CHECK(spec.indirect_costs == std::vector<Money>{0, 10});
  CHECK(spec.algorithms == std::vector<Algorithm>{Algorithm::Genetic, Algorithm::TabuSearch});
  CHECK(spec.seeds == std::vector<std::uint64_t>{3, 4, 5, 6});
  CHECK(spec.configs.ga.population_size == 20);
  CHECK(spec.configs.ts.tabu_tenure == 5);
  const auto again = spec_from_json(spec_to_json(spec));
  CHECK(again.seeds == spec.seeds);
  CHECK(again.activities == spec.activities);
  CHECK(again.configs.ga.population_size == 20);

  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"problem":{"type":"x","instance":"table2"},"seeds":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"problem":{"type":"tctp","instance":"table2"},"seeds":[1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      spec_from_json(nlohmann::json::parse(
          R"({"problem":{"type":"tctp","instance":"table2","indirect_cost":0},"seeds":[1],"bogus":1})")),
      std::invalid_argument);
  CHECK_THROWS_AS(configs_from_json(nlohmann::json::parse(R"({"sa":{"t0":1}})")), std::invalid_argument);
}
