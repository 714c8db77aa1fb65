#include "metasched/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metasched/bench.hpp"
#include "metasched/cpm.hpp"
#include "metasched/instance_io.hpp"
#include "metasched/oracle.hpp"
#include "metasched/rcpsp.hpp"
#include "metasched/search.hpp"
#include "metasched/tctp.hpp"

#ifndef METASCHED_VERSION
#define METASCHED_VERSION "0.0.0"
#endif

namespace metasched::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

std::string join_ids(const std::vector<int>& ids, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(ids[i]);
  }
  return s;
}

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("--list contains an empty entry");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError("--list entry '" + item + "' is not an integer");
    ids.push_back(v);
  }
  if (ids.empty()) throw UsageError("--list is empty");
  return ids;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string trace_csv(const search::RunResult& r) {
  std::ostringstream os;
  os << "eval,best_fitness\n";
  for (const auto& p : r.trajectory) os << p.evaluation << ',' << number(p.best_fitness) << '\n';
  return os.str();
}

// Flags shared by the stochastic subcommands.
struct SearchFlags {
  std::string algo = "ga";
  std::optional<std::uint64_t> seed;
  std::size_t max_evals = 20000;
  std::string trace;
  std::string config;

  std::optional<double> sa_t0, sa_cooling, sa_accept;
  std::optional<int> sa_steps, sa_samples;
  std::optional<int> ts_tenure, ts_stagnation;
  std::optional<std::string> ts_sample;
  std::optional<std::size_t> ga_pop, ga_tournament, ga_elite;
  std::optional<double> ga_cx, ga_mut;

  void attach(CLI::App* app, bool with_run_flags) {
    if (with_run_flags) {
      app->add_option("--algo", algo, "Metaheuristic: sa, ts or ga")->check(CLI::IsMember({"sa", "ts", "ga"}));
      app->add_option("--seed", seed, "Random seed (required for searches)");
      app->add_option("--max-evals", max_evals, "Evaluation budget")->check(CLI::PositiveNumber);
      app->add_option("--trace", trace, "Write the per-evaluation trajectory as CSV");
    }
    app->add_option("--config", config, "JSON config file with sa/ts/ga sections");
    app->add_option("--sa-t0", sa_t0, "SA initial temperature (calibrated when omitted)");
    app->add_option("--sa-cooling", sa_cooling, "SA geometric cooling factor");
    app->add_option("--sa-steps", sa_steps, "SA steps per temperature level");
    app->add_option("--sa-calib-accept", sa_accept, "SA calibration target acceptance");
    app->add_option("--sa-calib-samples", sa_samples, "SA calibration sample count");
    app->add_option("--ts-tenure", ts_tenure, "TS tabu tenure");
    app->add_option("--ts-sample", ts_sample, "TS neighborhood sample size or 'full'");
    app->add_option("--ts-stagnation", ts_stagnation, "TS iterations without improvement before diversifying");
    app->add_option("--ga-pop", ga_pop, "GA population size");
    app->add_option("--ga-cx", ga_cx, "GA crossover rate");
    app->add_option("--ga-mut", ga_mut, "GA per-gene mutation rate (1/n when omitted)");
    app->add_option("--ga-tournament", ga_tournament, "GA tournament size");
    app->add_option("--ga-elite", ga_elite, "GA elitism count");
  }

  // Defaults, then the config file (flag or METASCHED_CONFIG), then flags.
  search::AlgorithmConfigs resolve(search::AlgorithmConfigs base = {}, bool read_config = true) const {
    std::string path = read_config ? config : std::string();
    if (read_config && path.empty())
      if (const char* env = std::getenv("METASCHED_CONFIG"); env && *env) path = env;
    if (!path.empty()) {
      json doc;
      try {
        doc = json::parse(read_file(path));
      } catch (const json::exception& e) {
        throw UsageError("config " + path + ": " + e.what());
      }
      try {
        base = bench::configs_from_json(doc, base);
      } catch (const std::invalid_argument& e) {
        throw UsageError("config " + path + ": " + e.what());
      } catch (const json::exception& e) {
        throw UsageError("config " + path + ": " + e.what());
      }
    }
    if (sa_t0) base.sa.initial_temperature = *sa_t0;
    if (sa_cooling) base.sa.cooling_factor = *sa_cooling;
    if (sa_steps) base.sa.steps_per_temperature = *sa_steps;
    if (sa_accept) base.sa.calibration_acceptance = *sa_accept;
    if (sa_samples) base.sa.calibration_samples = *sa_samples;
    if (ts_tenure) base.ts.tabu_tenure = *ts_tenure;
    if (ts_stagnation) base.ts.stagnation_limit = *ts_stagnation;
    if (ts_sample) {
      if (*ts_sample == "full") {
        base.ts.neighborhood_sample = 0;
      } else {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(*ts_sample, &used);
          if (used != ts_sample->size() || v < 1) throw std::invalid_argument("");
          base.ts.neighborhood_sample = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
          throw UsageError("--ts-sample must be a positive count or 'full'");
        }
      }
    }
    if (ga_pop) base.ga.population_size = *ga_pop;
    if (ga_cx) base.ga.crossover_rate = *ga_cx;
    if (ga_mut) base.ga.mutation_rate = *ga_mut;
    if (ga_tournament) base.ga.tournament_size = *ga_tournament;
    if (ga_elite) base.ga.elitism_count = *ga_elite;
    try {
      base.sa.validate();
      base.ts.validate();
      base.ga.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return base;
  }

  search::AlgorithmConfigs resolve_with_budget() const {
    search::AlgorithmConfigs c = resolve();
    c.set_budget(max_evals);
    return c;
  }

  std::uint64_t require_seed(const char* command) const {
    if (!seed) throw UsageError(std::string(command) + ": --seed is required for a search");
    return *seed;
  }
};

// ---------------------------------------------------------------- cpm

void emit_cpm(const cpm::CpmResult& r, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    json acts = json::array();
    for (const auto& a : r.activities)
      acts.push_back({{"activity", a.id},
                      {"duration", a.duration},
                      {"ES", a.early_start},
                      {"EF", a.early_finish},
                      {"LS", a.late_start},
                      {"LF", a.late_finish},
                      {"TF", a.total_float}});
    out << json{{"activities", acts}, {"makespan", r.makespan}, {"critical", r.critical}}.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "Activity,ES,EF,LS,LF,TF\n";
    for (const auto& a : r.activities)
      out << a.id << ',' << a.early_start << ',' << a.early_finish << ',' << a.late_start << ',' << a.late_finish
          << ',' << a.total_float << '\n';
    return;
  }
  out << std::setw(8) << "Activity" << std::setw(6) << "ES" << std::setw(6) << "EF" << std::setw(6) << "LS"
      << std::setw(6) << "LF" << std::setw(6) << "TF" << '\n';
  for (const auto& a : r.activities)
    out << std::setw(8) << a.id << std::setw(6) << a.early_start << std::setw(6) << a.early_finish << std::setw(6)
        << a.late_start << std::setw(6) << a.late_finish << std::setw(6) << a.total_float << '\n';
  out << "makespan: " << r.makespan << '\n';
  out << "critical: " << join_ids(r.critical) << '\n';
}

// ---------------------------------------------------------------- rcpsp

void emit_schedule(const ProjectNetwork& net, int capacity, const rcpsp::ActivityList& list,
                   const search::RunResult* run, Format fmt, std::ostream& out) {
  const rcpsp::Schedule s = rcpsp::serial_sgs(net, capacity, list);
  const auto violations = rcpsp::check_schedule(net, s, capacity);
  if (!violations.empty()) throw ModelError("decoded schedule violates constraints: " + violations.front().message);
  const auto critical = rcpsp::constrained_critical(net, capacity, list);
  const int peak = rcpsp::resource_profile(net, s).peak();

  if (fmt == Format::Json) {
    json starts = json::object();
    for (const auto& [id, t] : s.start_times) starts[std::to_string(id)] = t;
    json doc{{"makespan", s.makespan},
             {"capacity", capacity},
             {"list", list},
             {"start_times", starts},
             {"constrained_critical", critical},
             {"peak_usage", peak}};
    if (run) {
      doc["algorithm"] = search::short_name(run->algorithm);
      doc["seed"] = run->seed;
      doc["evaluations"] = run->evaluations_used;
      doc["evaluations_to_best"] = run->evaluations_to_best;
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "activity,start,finish,constrained_critical\n";
    for (const auto& a : net.activities()) {
      const int t = s.start_times.at(a.id);
      const bool crit = std::find(critical.begin(), critical.end(), a.id) != critical.end();
      out << a.id << ',' << t << ',' << t + a.duration << ',' << (crit ? 1 : 0) << '\n';
    }
    return;
  }
  if (run)
    out << "algorithm: " << search::display_name(run->algorithm) << " (seed " << run->seed << ", "
        << run->evaluations_used << " evaluations, best at " << run->evaluations_to_best << ")\n";
  out << "makespan: " << s.makespan << '\n';
  out << "capacity: " << capacity << ", peak usage: " << peak << '\n';
  out << "list: " << join_ids(list, " ") << '\n';
  out << "constrained critical: " << join_ids(critical) << '\n';
  out << std::setw(8) << "Activity" << std::setw(7) << "start" << std::setw(7) << "finish" << '\n';
  for (const auto& a : net.activities()) {
    const int t = s.start_times.at(a.id);
    out << std::setw(8) << a.id << std::setw(7) << t << std::setw(7) << t + a.duration << '\n';
  }
}

// ---------------------------------------------------------------- tctp

void emit_tctp(const TctpInstance& inst, Money indirect, const search::RunResult& r, Format fmt, std::ostream& out) {
  const tctp::Evaluation e = tctp::evaluate_mode_vector(inst, ModeVector{r.best}, indirect);
  if (fmt == Format::Json) {
    out << json{{"algorithm", search::short_name(r.algorithm)},
                {"seed", r.seed},
                {"indirect_cost", indirect},
                {"modes", r.best},
                {"duration", e.duration},
                {"direct_cost", e.direct_cost},
                {"total_cost", e.total_cost},
                {"evaluations", r.evaluations_used},
                {"evaluations_to_best", r.evaluations_to_best},
                {"front_size", r.archive.size()}}
               .dump(2)
        << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "algorithm,seed,indirect_cost,duration,direct_cost,total_cost,modes\n";
    out << search::short_name(r.algorithm) << ',' << r.seed << ',' << indirect << ',' << e.duration << ','
        << e.direct_cost << ',' << e.total_cost << ',' << tctp::encoding_to_string(r.best) << '\n';
    return;
  }
  out << "algorithm: " << search::display_name(r.algorithm) << " (seed " << r.seed << ", " << r.evaluations_used
      << " evaluations, best at " << r.evaluations_to_best << ")\n";
  out << "indirect cost per day: " << indirect << '\n';
  out << "modes: " << tctp::encoding_to_string(r.best) << '\n';
  out << "duration: " << e.duration << '\n';
  out << "direct cost: " << e.direct_cost << '\n';
  out << "total cost: " << e.total_cost << '\n';
  out << "front points visited: " << r.archive.size() << '\n';
}

std::string archive_csv(const tctp::ParetoArchive& a) {
  std::ostringstream os;
  os << "duration,cost,modes\n";
  for (const auto& p : a.points()) os << p.duration << ',' << p.cost << ',' << tctp::encoding_to_string(p.encoding) << '\n';
  return os.str();
}

// ---------------------------------------------------------------- oracle

void emit_exact_tctp(const oracle::ExactTctp& r, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    json front = json::array();
    for (const auto& p : r.front) front.push_back({{"duration", p.duration}, {"cost", p.direct_cost}, {"modes", p.modes}});
    json doc{{"front", front}, {"combinations", r.combinations}};
    if (r.min_total_cost) {
      doc["min_total_cost"] = *r.min_total_cost;
      doc["min_total_duration"] = *r.min_total_duration;
      doc["min_total_modes"] = r.min_total_modes;
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "duration,cost,modes\n";
    for (const auto& p : r.front) out << p.duration << ',' << p.direct_cost << ',' << tctp::encoding_to_string(p.modes) << '\n';
    return;
  }
  out << "combinations: " << r.combinations << '\n';
  out << "exact front (" << r.front.size() << " points):\n";
  out << std::setw(10) << "duration" << std::setw(12) << "cost" << "  modes\n";
  for (const auto& p : r.front)
    out << std::setw(10) << p.duration << std::setw(12) << p.direct_cost << "  " << tctp::encoding_to_string(p.modes)
        << '\n';
  if (r.min_total_cost)
    out << "min total cost: " << *r.min_total_cost << " at duration " << *r.min_total_duration << " (modes "
        << tctp::encoding_to_string(r.min_total_modes) << ")\n";
}

TctpInstance load_tctp(const std::string& ref, std::optional<Money> indirect, const std::vector<ActivityId>& subset) {
  const std::string doc = load_document(ref);
  if (document_format(doc) != kTctpFormat)
    throw ModelError("instance " + ref + " is not a " + std::string(kTctpFormat) + " document");
  TctpInstance inst = parse_tctp_instance(doc, indirect);
  if (!subset.empty()) inst = inst.restricted(subset);
  return inst;
}

std::vector<ActivityId> parse_subset(const std::string& text) {
  if (text.empty()) return {};
  try {
    return parse_id_ranges(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--activities: ") + e.what());
  }
}

}  // namespace

std::string version_text() {
  return std::string("metasched ") + METASCHED_VERSION + " (instance formats " + std::string(kAoaFormat) + ", " +
         std::string(kTctpFormat) + ")";
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Project scheduling toolkit: CPM, RCPSP and time-cost trade-off search", "metasched"};
  app.require_subcommand(1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print toolkit and instance-format versions");

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output encoding: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };

  // cpm
  std::string instance;
  auto* cpm_cmd = app.add_subcommand("cpm", "Critical path analysis");
  cpm_cmd->add_option("--instance", instance, "Bundled instance name or file")->required();
  add_format(cpm_cmd);

  // rcpsp
  int capacity = 0;
  std::string list_text;
  SearchFlags rcpsp_flags;
  auto* rcpsp_cmd = app.add_subcommand("rcpsp", "Resource-constrained scheduling by serial SGS");
  rcpsp_cmd->add_option("--instance", instance, "Bundled instance name or file")->required();
  rcpsp_cmd->add_option("--capacity", capacity, "Renewable resource capacity")->required();
  rcpsp_cmd->add_option("--list", list_text, "Decode this comma-separated activity list without searching");
  rcpsp_flags.attach(rcpsp_cmd, true);
  add_format(rcpsp_cmd);

  // tctp
  std::optional<Money> indirect;
  std::string emit_front;
  std::string activities;
  SearchFlags tctp_flags;
  auto* tctp_cmd = app.add_subcommand("tctp", "Time-cost trade-off search");
  tctp_cmd->add_option("--instance", instance, "Bundled instance name or file")->required();
  tctp_cmd->add_option("--indirect-cost", indirect, "Indirect cost per unit of project duration");
  tctp_cmd->add_option("--activities", activities, "Restrict to these activity ids, e.g. 1-6");
  tctp_cmd->add_option("--emit-front", emit_front, "Write the run's Pareto archive as CSV");
  tctp_flags.attach(tctp_cmd, true);
  add_format(tctp_cmd);

  // bench
  std::string spec_path, out_dir;
  std::optional<std::size_t> threads;
  SearchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Multi-seed experiment harness");
  bench_cmd->add_option("--spec", spec_path, "Experiment spec (JSON)")->required();
  bench_cmd->add_option("--out", out_dir, "Directory for report.json, summary.csv and front.csv")->required();
  bench_cmd->add_option("--threads", threads, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  bench_flags.attach(bench_cmd, false);
  add_format(bench_cmd);

  // oracle
  std::optional<int> oracle_capacity;
  std::optional<Money> oracle_indirect;
  std::size_t guard_activities = oracle::OracleGuard{}.max_activities;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact reference answers for small instances");
  oracle_cmd->require_subcommand(1);
  std::vector<CLI::App*> oracle_subs;
  for (const char* name : {"cpm", "tctp", "rcpsp"}) {
    auto* sub = oracle_cmd->add_subcommand(name, std::string("Exact ") + name);
    sub->add_option("--instance", instance, "Bundled instance name or file")->required();
    sub->add_option("--activities", activities, "Restrict to these activity ids, e.g. 1-8");
    if (std::string(name) == "rcpsp") sub->add_option("--capacity", oracle_capacity, "Resource capacity")->required();
    if (std::string(name) == "tctp") sub->add_option("--indirect-cost", oracle_indirect, "Also report the min total cost");
    sub->add_option("--max-activities", guard_activities, "Refuse instances larger than this");
    add_format(sub);
    oracle_subs.push_back(sub);
  }

  // instances
  std::string export_name, export_path;
  auto* inst_cmd = app.add_subcommand("instances", "Bundled instance catalogue");
  inst_cmd->require_subcommand(1);
  auto* list_cmd = inst_cmd->add_subcommand("list", "List bundled instances");
  add_format(list_cmd);
  auto* export_cmd = inst_cmd->add_subcommand("export", "Write a bundled instance to a file");
  export_cmd->add_option("name", export_name, "Instance name")->required();
  export_cmd->add_option("path", export_path, "Destination file")->required();

  // --version works without a subcommand.
  if (std::find(args.begin(), args.end(), "--version") != args.end() && args.size() == 1) {
    out << version_text() << '\n';
    return kExitOk;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = kFormats.at(format);
  try {
    if (show_version) {
      out << version_text() << '\n';
      return kExitOk;
    }

    if (cpm_cmd->parsed()) {
      emit_cpm(cpm::compute_cpm(load_network(instance)), fmt, out);
      return kExitOk;
    }

    if (rcpsp_cmd->parsed()) {
      const ProjectNetwork net = load_network(instance);
      rcpsp::require_capacity(net, capacity);
      if (!list_text.empty()) {
        const auto list = parse_list(list_text);
        rcpsp::require_feasible_list(net, list);
        emit_schedule(net, capacity, list, nullptr, fmt, out);
        return kExitOk;
      }
      const auto seed = rcpsp_flags.require_seed("rcpsp");
      const auto configs = rcpsp_flags.resolve_with_budget();
      const search::RcpspProblem problem(net, capacity);
      const auto r = search::run(search::parse_algorithm(rcpsp_flags.algo), problem, configs, seed);
      if (!rcpsp_flags.trace.empty()) write_file(rcpsp_flags.trace, trace_csv(r));
      emit_schedule(net, capacity, r.best, &r, fmt, out);
      return kExitOk;
    }

    if (tctp_cmd->parsed()) {
      const TctpInstance inst = load_tctp(instance, indirect, parse_subset(activities));
      if (!inst.has_indirect_cost())
        throw UsageError("tctp: --indirect-cost is required (the instance file does not define indirect_cost_per_day)");
      const Money per_day = inst.indirect_cost_per_day();
      if (per_day < 0) throw UsageError("tctp: --indirect-cost must be non-negative");
      const auto seed = tctp_flags.require_seed("tctp");
      const auto configs = tctp_flags.resolve_with_budget();
      const search::TctpProblem problem(inst, per_day);
      const auto r = search::run(search::parse_algorithm(tctp_flags.algo), problem, configs, seed);
      if (!tctp_flags.trace.empty()) write_file(tctp_flags.trace, trace_csv(r));
      if (!emit_front.empty()) write_file(emit_front, archive_csv(r.archive));
      emit_tctp(inst, per_day, r, fmt, out);
      return kExitOk;
    }

    if (bench_cmd->parsed()) {
      json doc;
      try {
        doc = json::parse(read_file(spec_path));
      } catch (const json::exception& e) {
        throw UsageError("spec " + spec_path + ": " + e.what());
      }
      bench::ExperimentSpec spec;
      try {
        spec = bench::spec_from_json(doc);
        // Later sources win: config file, experiment file section, flags.
        search::AlgorithmConfigs merged = bench_flags.resolve();
        if (doc.contains("config")) merged = bench::configs_from_json(doc["config"], merged);
        spec.configs = bench_flags.resolve(merged, false);
        if (threads) spec.threads = *threads;
        spec.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError("spec " + spec_path + ": " + e.what());
      }
      const auto report = bench::run_experiment(spec);
      bench::write_report(report, out_dir);
      if (fmt == Format::Json) out << bench::report_json(report).dump(2) << '\n';
      else out << bench::summary_csv(report);
      return kExitOk;
    }

    if (oracle_cmd->parsed()) {
      const oracle::OracleGuard guard{guard_activities, oracle::OracleGuard{}.max_states};
      const auto subset = parse_subset(activities);
      if (oracle_subs[0]->parsed()) {
        ProjectNetwork net = load_network(instance);
        if (!subset.empty()) net = net.induced(subset);
        const int span = oracle::longest_path_makespan(net);
        if (fmt == Format::Json) out << json{{"makespan", span}}.dump(2) << '\n';
        else if (fmt == Format::Csv) out << "makespan\n" << span << '\n';
        else out << "makespan: " << span << '\n';
      } else if (oracle_subs[1]->parsed()) {
        const TctpInstance inst = load_tctp(instance, oracle_indirect, subset);
        std::optional<Money> per_day;
        if (inst.has_indirect_cost()) per_day = inst.indirect_cost_per_day();
        emit_exact_tctp(oracle::exhaustive_tctp(inst, guard, per_day), fmt, out);
      } else {
        ProjectNetwork net = load_network(instance);
        if (!subset.empty()) net = net.induced(subset);
        rcpsp::require_capacity(net, *oracle_capacity);
        const auto r = oracle::exhaustive_rcpsp(net, *oracle_capacity, guard);
        if (fmt == Format::Json)
          out << json{{"makespan", r.makespan}, {"list", r.best_list}, {"states_explored", r.states_explored}}.dump(2)
              << '\n';
        else if (fmt == Format::Csv)
          out << "makespan,list\n" << r.makespan << ',' << join_ids(r.best_list, " ") << '\n';
        else
          out << "optimal makespan: " << r.makespan << "\nlist: " << join_ids(r.best_list, " ")
              << "\nstates explored: " << r.states_explored << '\n';
      }
      return kExitOk;
    }

    if (list_cmd->parsed()) {
      const auto& cat = bundled_instances();
      if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& b : cat)
          arr.push_back({{"name", b.name}, {"format", b.format}, {"activities", b.activity_count}, {"provenance", b.provenance}});
        out << arr.dump(2) << '\n';
      } else if (fmt == Format::Csv) {
        out << "name,format,activities,provenance\n";
        for (const auto& b : cat) out << b.name << ',' << b.format << ',' << b.activity_count << ",\"" << b.provenance << "\"\n";
      } else {
        for (const auto& b : cat)
          out << std::left << std::setw(8) << b.name << std::setw(9) << b.format << std::right << std::setw(3)
              << b.activity_count << " activities  " << b.provenance << '\n';
      }
      return kExitOk;
    }

    if (export_cmd->parsed()) {
      const BundledInstance* b = find_bundled(export_name);
      if (!b) throw UsageError("unknown bundled instance '" + export_name + "'");
      write_file(export_path, std::string(b->document));
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const oracle::GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace metasched::cli
