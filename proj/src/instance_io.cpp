#include "metasched/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace metasched {

using nlohmann::json;

namespace {

json parse_json(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing required field '" + key + "'");
  return *it;
}

int require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

Money to_money(const json& v, const std::string& where) {
  if (v.is_number_integer()) return v.get<Money>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::nearbyint(d) != d) throw ParseError(where + ": currency amounts must be whole units");
    return static_cast<Money>(d);
  }
  throw ParseError(where + ": expected a number");
}

void check_format(const json& doc, std::string_view expected) {
  if (!doc.is_object()) throw ParseError("malformed document: top level must be an object");
  auto it = doc.find("format");
  if (it == doc.end() || !it->is_string()) throw ParseError("malformed document: missing 'format'");
  if (it->get<std::string>() != expected)
    throw ParseError("unexpected format '" + it->get<std::string>() + "', expected '" + std::string(expected) + "'");
}

}  // namespace

std::string document_format(std::string_view document) {
  json doc = parse_json(document);
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    throw ParseError("malformed document: missing 'format'");
  return doc["format"].get<std::string>();
}

std::vector<AoaArc> parse_aoa_instance(std::string_view document) {
  json doc = parse_json(document);
  check_format(doc, kAoaFormat);
  const json& arcs = require(doc, "arcs", "document");
  if (!arcs.is_array()) throw ParseError("malformed document: 'arcs' must be an array");
  if (arcs.empty()) throw ParseError("empty instance");

  std::vector<AoaArc> out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const json& rec = arcs[i];
    const std::string where =
        rec.is_object() && rec.contains("id") ? "activity " + rec["id"].dump() : "arc #" + std::to_string(i + 1);
    if (!rec.is_object()) throw ParseError(where + ": record must be an object");
    AoaArc arc;
    arc.activity_id = require_int(rec, "id", where);
    arc.start_node = require_int(rec, "start", where);
    arc.end_node = require_int(rec, "end", where);
    arc.duration = require_int(rec, "duration", where);
    arc.resource_demand = rec.contains("demand") ? require_int(rec, "demand", where) : 1;
    if (arc.activity_id < 1) throw ParseError(where + ": id must be positive");
    if (arc.duration < 0) throw ParseError(where + ": negative duration " + std::to_string(arc.duration));
    if (arc.resource_demand < 0) throw ParseError(where + ": negative demand");
    if (arc.duration > 0 && arc.start_node == arc.end_node)
      throw ParseError(where + ": start and end node coincide");
    if (rec.contains("successors")) {
      const json& s = rec["successors"];
      if (!s.is_array()) throw ParseError(where + ": 'successors' must be an array");
      std::vector<int> nodes;
      for (const auto& v : s) {
        if (!v.is_number_integer()) throw ParseError(where + ": successor entries must be integers");
        nodes.push_back(v.get<int>());
      }
      arc.successor_nodes = std::move(nodes);
    }
    out.push_back(std::move(arc));
  }
  return out;
}

TctpInstance parse_tctp_instance(std::string_view document, std::optional<Money> indirect_override) {
  json doc = parse_json(document);
  check_format(doc, kTctpFormat);
  const json& acts = require(doc, "activities", "document");
  if (!acts.is_array()) throw ParseError("malformed document: 'activities' must be an array");
  if (acts.empty()) throw ParseError("empty instance");

  std::vector<Activity> activities;
  std::map<ActivityId, std::vector<ActivityId>> preds;
  std::vector<std::vector<ActivityOption>> options;
  std::set<ActivityId> ids;

  for (std::size_t i = 0; i < acts.size(); ++i) {
    const json& rec = acts[i];
    if (!rec.is_object()) throw ParseError("activity #" + std::to_string(i + 1) + ": record must be an object");
    const std::string where0 = "activity #" + std::to_string(i + 1);
    const ActivityId id = require_int(rec, "id", where0);
    const std::string where = "activity " + std::to_string(id);
    if (id < 1) throw ParseError(where + ": id must be positive");
    if (!ids.insert(id).second) throw ParseError(where + ": duplicate activity id");

    std::vector<ActivityId> deps;
    if (rec.contains("depends")) {
      const json& d = rec["depends"];
      if (!d.is_array()) throw ParseError(where + ": 'depends' must be an array");
      for (const auto& v : d) {
        if (!v.is_number_integer()) throw ParseError(where + ": dependency ids must be integers");
        deps.push_back(v.get<int>());
      }
    }

    const json& opts = require(rec, "options", where);
    if (!opts.is_array() || opts.empty()) throw ParseError(where + ": 'options' must be a non-empty array");
    if (opts.size() > TctpInstance::kMaxOptions) throw ParseError(where + ": more than 5 options");
    std::vector<ActivityOption> list;
    for (std::size_t k = 0; k < opts.size(); ++k) {
      const json& o = opts[k];
      if (!o.is_object()) throw ParseError(where + ": option must be an object");
      if (o.contains("option")) {
        const int idx = require_int(o, "option", where);
        if (idx != static_cast<int>(k) + 1)
          throw ParseError(where + ": option index gap (expected " + std::to_string(k + 1) + ", found " +
                           std::to_string(idx) + ")");
      }
      ActivityOption opt;
      opt.duration = require_int(o, "duration", where);
      opt.direct_cost = to_money(require(o, "cost", where), where);
      if (opt.duration < 1) throw ParseError(where + ": option duration must be at least 1");
      if (opt.direct_cost < 0) throw ParseError(where + ": negative option cost");
      list.push_back(opt);
    }

    activities.push_back({id, list.front().duration, 1});
    if (!deps.empty()) preds.emplace(id, std::move(deps));
    options.push_back(std::move(list));
  }

  for (const auto& [id, deps] : preds)
    for (ActivityId d : deps)
      if (!ids.contains(d))
        throw ParseError("activity " + std::to_string(id) + ": unknown dependency id " + std::to_string(d));

  std::optional<Money> indirect = indirect_override;
  if (!indirect && doc.contains("indirect_cost_per_day") && !doc["indirect_cost_per_day"].is_null())
    indirect = to_money(doc["indirect_cost_per_day"], "indirect_cost_per_day");
  if (indirect && *indirect < 0) throw ParseError("indirect cost must be non-negative");

  ProjectNetwork net(std::move(activities), std::move(preds));
  for (const auto& v : validate_network(net))
    throw ParseError("invalid network: " + v.message);
  return {std::move(net), std::move(options), indirect};
}

std::string serialize_aoa(const std::vector<AoaArc>& arcs, std::string_view name) {
  json doc;
  doc["format"] = kAoaFormat;
  if (!name.empty()) doc["name"] = name;
  json list = json::array();
  for (const auto& a : arcs) {
    json rec{{"id", a.activity_id}, {"start", a.start_node}, {"end", a.end_node},
             {"duration", a.duration}, {"demand", a.resource_demand}};
    if (a.successor_nodes) rec["successors"] = *a.successor_nodes;
    list.push_back(std::move(rec));
  }
  doc["arcs"] = std::move(list);
  return doc.dump(2);
}

std::string serialize_tctp(const TctpInstance& instance, std::string_view name) {
  json doc;
  doc["format"] = kTctpFormat;
  if (!name.empty()) doc["name"] = name;
  if (instance.indirect_cost()) doc["indirect_cost_per_day"] = *instance.indirect_cost();
  json list = json::array();
  const auto& net = instance.network();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const ActivityId id = net.activity(i).id;
    json opts = json::array();
    for (const auto& o : instance.options(i)) opts.push_back({{"duration", o.duration}, {"cost", o.direct_cost}});
    list.push_back({{"id", id}, {"depends", net.predecessors(id)}, {"options", std::move(opts)}});
  }
  doc["activities"] = std::move(list);
  return doc.dump(2);
}

std::string load_document(const std::string& reference) {
  if (const auto* b = find_bundled(reference)) return std::string(b->document);
  std::ifstream in(reference, std::ios::binary);
  if (!in) throw ModelError("cannot open instance '" + reference + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ProjectNetwork load_network(const std::string& reference) {
  const std::string doc = load_document(reference);
  const std::string format = document_format(doc);
  if (format == kAoaFormat) {
    const auto arcs = parse_aoa_instance(doc);
    return derive_precedence_from_nodes(arcs);
  }
  if (format == kTctpFormat) return parse_tctp_instance(doc).network();
  throw ParseError("unknown instance format '" + format + "'");
}

}  // namespace metasched
