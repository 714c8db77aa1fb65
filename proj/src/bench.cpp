#include "metasched/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "metasched/instance_io.hpp"

namespace metasched::bench {

using nlohmann::json;
using search::Algorithm;

namespace {

std::string problem_name(ProblemKind k) { return k == ProblemKind::Rcpsp ? "rcpsp" : "tctp"; }

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string contributors_label(const std::vector<Algorithm>& algs) {
  std::string out;
  for (std::size_t i = 0; i < algs.size(); ++i) {
    if (i) out += '|';
    out += search::short_name(algs[i]);
  }
  return out;
}

template <class T>
void read_field(const json& obj, const char* key, T& target) {
  if (auto it = obj.find(key); it != obj.end()) target = it->get<T>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& section) {
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
      throw std::invalid_argument("unknown key '" + key + "' in " + section);
  }
}

struct Job {
  Algorithm algorithm;
  std::uint64_t seed;
  std::optional<Money> indirect;
  const search::SearchProblem* problem;
};

}  // namespace

void ExperimentSpec::validate() const {
  if (instance.empty()) throw std::invalid_argument("experiment needs an instance");
  if (algorithms.empty()) throw std::invalid_argument("experiment needs at least one algorithm");
  if (seeds.empty()) throw std::invalid_argument("experiment needs at least one seed");
  if (max_evaluations < 1) throw std::invalid_argument("evaluation budget must be positive");
  if (kind == ProblemKind::Rcpsp && capacity < 1) throw std::invalid_argument("RCPSP experiment needs a capacity");
  if (kind == ProblemKind::Tctp && indirect_costs.empty())
    throw std::invalid_argument("TCTP experiment needs at least one indirect cost");
  for (Money i : indirect_costs)
    if (i < 0) throw std::invalid_argument("indirect cost must be non-negative");
  search::AlgorithmConfigs c = configs;
  c.set_budget(max_evaluations);
  c.sa.validate();
  c.ts.validate();
  c.ga.validate();
}

std::map<Algorithm, double> success_percentage(const std::vector<RunRecord>& runs,
                                               const tctp::ParetoArchive& pooled_front) {
  if (pooled_front.empty()) throw std::invalid_argument("success percentage needs a non-empty pooled front");
  std::map<Algorithm, double> share;
  for (const auto& r : runs) share.try_emplace(r.algorithm, 0.0);

  for (const auto& point : pooled_front.points()) {
    std::set<Algorithm> attaining;
    for (const auto& r : runs)
      if (r.archive.contains(point.objectives())) attaining.insert(r.algorithm);
    for (Algorithm a : attaining) share[a] += 1.0 / static_cast<double>(attaining.size());
  }
  for (auto& [alg, s] : share) s = 100.0 * s / static_cast<double>(pooled_front.size());
  return share;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  ExperimentReport report;
  report.spec = spec;

  search::AlgorithmConfigs configs = spec.configs;
  configs.set_budget(spec.max_evaluations);

  // Problems are built once and shared read-only by all runs.
  std::vector<std::unique_ptr<search::SearchProblem>> problems;
  std::vector<Job> jobs;
  if (spec.kind == ProblemKind::Rcpsp) {
    ProjectNetwork net = load_network(spec.instance);
    if (!spec.activities.empty()) net = net.induced(spec.activities);
    problems.push_back(std::make_unique<search::RcpspProblem>(std::move(net), spec.capacity));
    for (Algorithm a : spec.algorithms)
      for (std::uint64_t s : spec.seeds) jobs.push_back({a, s, std::nullopt, problems.back().get()});
  } else {
    TctpInstance inst = parse_tctp_instance(load_document(spec.instance));
    if (!spec.activities.empty()) inst = inst.restricted(spec.activities);
    for (Money indirect : spec.indirect_costs) problems.push_back(std::make_unique<search::TctpProblem>(inst, indirect));
    for (Algorithm a : spec.algorithms)
      for (std::size_t k = 0; k < spec.indirect_costs.size(); ++k)
        for (std::uint64_t s : spec.seeds) jobs.push_back({a, s, spec.indirect_costs[k], problems[k].get()});
  }

  report.runs.resize(jobs.size());
  auto execute = [&](std::size_t j) {
    const Job& job = jobs[j];
    const search::RunResult r = search::run(job.algorithm, *job.problem, configs, job.seed);
    RunRecord& rec = report.runs[j];
    rec.algorithm = job.algorithm;
    rec.seed = job.seed;
    rec.indirect_cost = job.indirect;
    rec.best = r.best;
    rec.fitness = r.best_fitness.value;
    rec.duration = r.best_fitness.duration;
    rec.direct_cost = r.best_fitness.cost;
    rec.evaluations_used = r.evaluations_used;
    rec.native_iterations = r.native_iterations;
    rec.evaluations_to_best = r.evaluations_to_best;
    rec.archive = r.archive;
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.threads, jobs.size()));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) execute(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t j = next++; j < jobs.size(); j = next++) execute(j);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Aggregation walks runs in job order, never completion order.
  tctp::ParetoArchive pooled;
  for (const auto& r : report.runs) {
    pooled.merge(r.archive);
    report.algorithm_fronts[r.algorithm].merge(r.archive);
  }
  for (const auto& p : pooled.points()) {
    PooledPoint pp{p.duration, p.cost, p.encoding, {}};
    for (Algorithm a : spec.algorithms) {
      const bool attains = std::any_of(report.runs.begin(), report.runs.end(), [&](const RunRecord& r) {
        return r.algorithm == a && r.archive.contains(p.objectives());
      });
      if (attains) pp.contributors.push_back(a);
    }
    report.pooled_front.push_back(std::move(pp));
  }
  if (!pooled.empty()) report.success_percent = success_percentage(report.runs, pooled);

  std::vector<std::optional<Money>> groups;
  if (spec.kind == ProblemKind::Rcpsp) groups.push_back(std::nullopt);
  else for (Money i : spec.indirect_costs) groups.push_back(i);

  for (Algorithm a : spec.algorithms) {
    for (const auto& group : groups) {
      double best_any = std::numeric_limits<double>::infinity();
      for (const auto& r : report.runs)
        if (r.indirect_cost == group) best_any = std::min(best_any, r.fitness);

      AlgorithmSummary s;
      s.algorithm = a;
      s.indirect_cost = group;
      const RunRecord* best = nullptr;
      std::size_t close = 0;
      for (const auto& r : report.runs) {
        if (r.algorithm != a || r.indirect_cost != group) continue;
        ++s.runs;
        if (!best || r.fitness < best->fitness) best = &r;
        s.avg_duration += r.duration;
        s.avg_cost += r.fitness;
        s.avg_iterations += static_cast<double>(r.native_iterations);
        s.avg_evaluations_to_best += static_cast<double>(r.evaluations_to_best);
        if (r.fitness <= best_any + 0.01 * std::abs(best_any)) ++close;
      }
      if (!best) continue;
      const double n = static_cast<double>(s.runs);
      s.avg_duration /= n;
      s.avg_cost /= n;
      s.avg_iterations /= n;
      s.avg_evaluations_to_best /= n;
      s.within_one_percent = 100.0 * static_cast<double>(close) / n;
      s.best_seed = best->seed;
      s.min_duration = best->duration;
      s.min_cost = best->fitness;
      s.min_run_iterations = best->native_iterations;
      s.min_run_evaluations = best->evaluations_to_best;
      report.summaries.push_back(s);
    }
  }
  return report;
}

std::string front_csv(const ExperimentReport& report) {
  std::vector<const PooledPoint*> rows;
  for (const auto& p : report.pooled_front) rows.push_back(&p);
  std::stable_sort(rows.begin(), rows.end(), [](const PooledPoint* a, const PooledPoint* b) {
    return std::tie(a->duration, a->cost) < std::tie(b->duration, b->cost);
  });
  std::ostringstream os;
  os << "algorithm,duration,cost,modes_or_list\n";
  for (const auto* p : rows)
    os << contributors_label(p->contributors) << ',' << p->duration << ',' << p->cost << ','
       << tctp::encoding_to_string(p->encoding) << '\n';
  return os.str();
}

std::string summary_csv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "algorithm,indirect_cost,runs,min_duration,min_cost,min_iterations,avg_duration,avg_cost,avg_iterations,"
        "success_percent,within_1pct_percent\n";
  for (const auto& s : report.summaries) {
    auto it = report.success_percent.find(s.algorithm);
    const double success = it == report.success_percent.end() ? 0.0 : it->second;
    os << search::short_name(s.algorithm) << ',' << (s.indirect_cost ? std::to_string(*s.indirect_cost) : "")
       << ',' << s.runs << ',' << s.min_duration << ',' << fixed(s.min_cost, 0) << ',' << s.min_run_iterations << ','
       << fixed(s.avg_duration, 2) << ',' << fixed(s.avg_cost, 2) << ',' << fixed(s.avg_iterations, 2) << ','
       << fixed(success, 2) << ',' << fixed(s.within_one_percent, 2) << '\n';
  }
  return os.str();
}

json report_json(const ExperimentReport& report) {
  json doc;
  doc["spec"] = spec_to_json(report.spec);
  doc["notes"] = {
      "averages are taken over all runs, successful or not",
      "min_* columns describe the single best run (lowest fitness, earliest seed on ties)",
      "min_iterations is the best run's native iteration count (GA generations, SA steps, TS moves)",
      "success_percent is each algorithm's share of pooled-front points, ties split evenly",
      "front cost is direct cost; fitness and min_cost include duration * indirect_cost",
  };
  json runs = json::array();
  for (const auto& r : report.runs) {
    json front = json::array();
    for (const auto& p : r.archive.points()) front.push_back({{"duration", p.duration}, {"cost", p.cost}});
    runs.push_back({{"algorithm", search::short_name(r.algorithm)},
                    {"seed", r.seed},
                    {"indirect_cost", r.indirect_cost ? json(*r.indirect_cost) : json(nullptr)},
                    {"best", r.best},
                    {"fitness", r.fitness},
                    {"duration", r.duration},
                    {"direct_cost", r.direct_cost},
                    {"evaluations_used", r.evaluations_used},
                    {"native_iterations", r.native_iterations},
                    {"evaluations_to_best", r.evaluations_to_best},
                    {"front", std::move(front)}});
  }
  doc["runs"] = std::move(runs);

  json summaries = json::array();
  for (const auto& s : report.summaries) {
    auto it = report.success_percent.find(s.algorithm);
    summaries.push_back({{"algorithm", search::short_name(s.algorithm)},
                         {"indirect_cost", s.indirect_cost ? json(*s.indirect_cost) : json(nullptr)},
                         {"runs", s.runs},
                         {"best_seed", s.best_seed},
                         {"min_duration", s.min_duration},
                         {"min_cost", s.min_cost},
                         {"min_iterations", s.min_run_iterations},
                         {"min_evaluations_to_best", s.min_run_evaluations},
                         {"avg_duration", s.avg_duration},
                         {"avg_cost", s.avg_cost},
                         {"avg_iterations", s.avg_iterations},
                         {"avg_evaluations_to_best", s.avg_evaluations_to_best},
                         {"success_percent", it == report.success_percent.end() ? 0.0 : it->second},
                         {"within_1pct_percent", s.within_one_percent}});
  }
  doc["summary"] = std::move(summaries);

  json front = json::array();
  for (const auto& p : report.pooled_front) {
    std::vector<std::string> who;
    for (Algorithm a : p.contributors) who.emplace_back(search::short_name(a));
    front.push_back({{"duration", p.duration}, {"cost", p.cost}, {"encoding", p.encoding}, {"algorithms", who}});
  }
  doc["pooled_front"] = std::move(front);
  return doc;
}

void export_front_csv(const ExperimentReport& report, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + destination.string());
  out << front_csv(report);
  if (!out) throw std::runtime_error("cannot write " + destination.string());
}

void write_report(const ExperimentReport& report, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create " + directory.string() + ": " + ec.message());
  {
    std::ofstream out(directory / "report.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (directory / "report.json").string());
    out << report_json(report).dump(2) << '\n';
  }
  {
    std::ofstream out(directory / "summary.csv", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (directory / "summary.csv").string());
    out << summary_csv(report);
  }
  export_front_csv(report, directory / "front.csv");
}

search::AlgorithmConfigs configs_from_json(const json& doc, search::AlgorithmConfigs base) {
  if (!doc.is_object()) throw std::invalid_argument("config must be an object");
  reject_unknown(doc, {"sa", "ts", "ga", "max_evaluations", "format"}, "config");
  if (doc.contains("max_evaluations")) base.set_budget(doc["max_evaluations"].get<std::size_t>());
  if (auto it = doc.find("sa"); it != doc.end()) {
    const json& s = *it;
    reject_unknown(s, {"initial_temperature", "cooling_factor", "steps_per_temperature", "calibration_acceptance",
                       "calibration_samples", "max_evaluations"},
                   "sa config");
    if (s.contains("initial_temperature") && !s["initial_temperature"].is_null())
      base.sa.initial_temperature = s["initial_temperature"].get<double>();
    read_field(s, "cooling_factor", base.sa.cooling_factor);
    read_field(s, "steps_per_temperature", base.sa.steps_per_temperature);
    read_field(s, "calibration_acceptance", base.sa.calibration_acceptance);
    read_field(s, "calibration_samples", base.sa.calibration_samples);
    read_field(s, "max_evaluations", base.sa.max_evaluations);
  }
  if (auto it = doc.find("ts"); it != doc.end()) {
    const json& t = *it;
    reject_unknown(t, {"tabu_tenure", "neighborhood_sample", "stagnation_limit", "max_evaluations"}, "ts config");
    read_field(t, "tabu_tenure", base.ts.tabu_tenure);
    if (t.contains("neighborhood_sample")) {
      const json& v = t["neighborhood_sample"];
      if (v.is_string()) {
        if (v.get<std::string>() != "full") throw std::invalid_argument("ts neighborhood_sample must be a count or \"full\"");
        base.ts.neighborhood_sample = 0;
      } else {
        base.ts.neighborhood_sample = v.get<std::size_t>();
      }
    }
    read_field(t, "stagnation_limit", base.ts.stagnation_limit);
    read_field(t, "max_evaluations", base.ts.max_evaluations);
  }
  if (auto it = doc.find("ga"); it != doc.end()) {
    const json& g = *it;
    reject_unknown(g, {"population_size", "crossover_rate", "mutation_rate", "tournament_size", "elitism_count",
                       "max_evaluations"},
                   "ga config");
    read_field(g, "population_size", base.ga.population_size);
    read_field(g, "crossover_rate", base.ga.crossover_rate);
    if (g.contains("mutation_rate") && !g["mutation_rate"].is_null())
      base.ga.mutation_rate = g["mutation_rate"].get<double>();
    read_field(g, "tournament_size", base.ga.tournament_size);
    read_field(g, "elitism_count", base.ga.elitism_count);
    read_field(g, "max_evaluations", base.ga.max_evaluations);
  }
  return base;
}

json configs_to_json(const search::AlgorithmConfigs& c) {
  json doc;
  doc["sa"] = {{"initial_temperature", c.sa.initial_temperature ? json(*c.sa.initial_temperature) : json(nullptr)},
               {"cooling_factor", c.sa.cooling_factor},
               {"steps_per_temperature", c.sa.steps_per_temperature},
               {"calibration_acceptance", c.sa.calibration_acceptance},
               {"calibration_samples", c.sa.calibration_samples}};
  doc["ts"] = {{"tabu_tenure", c.ts.tabu_tenure},
               {"neighborhood_sample", c.ts.neighborhood_sample == 0 ? json("full") : json(c.ts.neighborhood_sample)},
               {"stagnation_limit", c.ts.stagnation_limit}};
  doc["ga"] = {{"population_size", c.ga.population_size},
               {"crossover_rate", c.ga.crossover_rate},
               {"mutation_rate", c.ga.mutation_rate ? json(*c.ga.mutation_rate) : json(nullptr)},
               {"tournament_size", c.ga.tournament_size},
               {"elitism_count", c.ga.elitism_count}};
  return doc;
}

ExperimentSpec spec_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw std::invalid_argument("experiment spec must be an object");
    reject_unknown(doc, {"format", "problem", "algorithms", "seeds", "base_seed", "runs", "max_evaluations", "config",
                         "threads"},
                   "experiment spec");
    ExperimentSpec spec;
    if (!doc.contains("problem")) throw std::invalid_argument("experiment spec needs a 'problem' section");
    const json& p = doc["problem"];
    reject_unknown(p, {"type", "instance", "activities", "capacity", "indirect_cost", "indirect_costs"}, "problem");
    const std::string type = p.value("type", "");
    if (type == "rcpsp") spec.kind = ProblemKind::Rcpsp;
    else if (type == "tctp") spec.kind = ProblemKind::Tctp;
    else throw std::invalid_argument("problem.type must be 'rcpsp' or 'tctp'");
    spec.instance = p.value("instance", "");
    if (p.contains("activities")) {
      const json& a = p["activities"];
      spec.activities = a.is_string() ? parse_id_ranges(a.get<std::string>()) : a.get<std::vector<ActivityId>>();
    }
    read_field(p, "capacity", spec.capacity);
    if (p.contains("indirect_cost")) spec.indirect_costs.push_back(p["indirect_cost"].get<Money>());
    if (p.contains("indirect_costs")) {
      auto more = p["indirect_costs"].get<std::vector<Money>>();
      spec.indirect_costs.insert(spec.indirect_costs.end(), more.begin(), more.end());
    }

    if (doc.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& a : doc["algorithms"]) spec.algorithms.push_back(search::parse_algorithm(a.get<std::string>()));
    }
    if (doc.contains("seeds")) {
      spec.seeds = doc["seeds"].get<std::vector<std::uint64_t>>();
    } else if (doc.contains("base_seed")) {
      const auto base = doc["base_seed"].get<std::uint64_t>();
      const auto runs = doc.value("runs", std::uint64_t{1});
      for (std::uint64_t k = 0; k < runs; ++k) spec.seeds.push_back(base + k);
    }
    read_field(doc, "max_evaluations", spec.max_evaluations);
    read_field(doc, "threads", spec.threads);
    if (doc.contains("config")) spec.configs = configs_from_json(doc["config"], spec.configs);
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed experiment spec: ") + e.what());
  }
}

json spec_to_json(const ExperimentSpec& spec) {
  json problem{{"type", problem_name(spec.kind)}, {"instance", spec.instance}};
  if (!spec.activities.empty()) problem["activities"] = spec.activities;
  if (spec.kind == ProblemKind::Rcpsp) problem["capacity"] = spec.capacity;
  else problem["indirect_costs"] = spec.indirect_costs;
  std::vector<std::string> algs;
  for (Algorithm a : spec.algorithms) algs.emplace_back(search::short_name(a));
  return {{"problem", problem},
          {"algorithms", algs},
          {"seeds", spec.seeds},
          {"max_evaluations", spec.max_evaluations},
          {"config", configs_to_json(spec.configs)}};
}

}  // namespace metasched::bench
