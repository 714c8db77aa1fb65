#include <doctest.h>

#include <algorithm>

#include "metasched/instance_io.hpp"
#include "metasched/model.hpp"
#include "support.hpp"

using namespace metasched;

namespace {

bool has_kind(const std::vector<Violation>& report, Violation::Kind kind) {
  return std::any_of(report.begin(), report.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("node pairs give predecessors of activity 14") {
  const auto net = testsupport::table1();
  CHECK(net.predecessors(14) == std::vector<ActivityId>{2, 5, 12});
}

TEST_CASE("node pairs give empty predecessors for 1 and three for 17") {
  const auto net = testsupport::table1();
  CHECK(net.predecessors(1).empty());
  CHECK(net.predecessors(17) == std::vector<ActivityId>{3, 8, 10});
}

TEST_CASE("single arc yields one activity without predecessors") {
  const std::vector<AoaArc> arcs{{1, 1, 2, 4, 1, std::nullopt}};
  const auto net = derive_precedence_from_nodes(arcs);
  REQUIRE(net.size() == 1);
  CHECK(net.predecessors(1).empty());
  CHECK(net.activity(0).duration == 4);
}

TEST_CASE("derivation rejects duplicate ids and cycles") {
  const std::vector<AoaArc> dup{{1, 0, 1, 2, 1, std::nullopt}, {1, 1, 2, 3, 1, std::nullopt}};
  CHECK_THROWS_AS(derive_precedence_from_nodes(dup), ModelError);
  const std::vector<AoaArc> loop{{1, 0, 1, 2, 1, std::nullopt}, {2, 1, 0, 3, 1, std::nullopt}};
  CHECK_THROWS_AS(derive_precedence_from_nodes(loop), ModelError);
}

TEST_CASE("published successor column agrees with the node columns") {
  const auto arcs = parse_aoa_instance(load_document("table1"));
  CHECK(check_successor_hints(arcs).empty());
  auto broken = arcs;
  broken[0].successor_nodes = std::vector<int>{7};
  CHECK(check_successor_hints(broken).size() == 1);
}

TEST_CASE("parse_aoa_instance reads the bundled network") {
  const auto arcs = parse_aoa_instance(load_document("table1"));
  REQUIRE(arcs.size() == 17);
  CHECK(arcs[0].activity_id == 1);
  CHECK(arcs[0].start_node == 0);
  CHECK(arcs[0].end_node == 2);
  CHECK(arcs[0].duration == 20);
}

TEST_CASE("parse_aoa_instance errors") {
  CHECK_THROWS_WITH_AS(parse_aoa_instance(R"({"format":"aoa-v1","arcs":[]})"), "empty instance", ParseError);
  const char* negative = R"({"format":"aoa-v1","arcs":[{"id":3,"start":0,"end":1,"duration":-5}]})";
  try {
    (void)parse_aoa_instance(negative);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("activity 3") != std::string::npos);
    CHECK(msg.find("-5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_aoa_instance("not json"), ParseError);
  CHECK_THROWS_AS(parse_aoa_instance(R"({"format":"tctp-v1","activities":[]})"), ParseError);
}

TEST_CASE("parse_tctp_instance reads options and dependencies") {
  const auto inst = testsupport::table2();
  REQUIRE(inst.size() == 18);
  const std::vector<ActivityOption> four{{12, 45000}, {16, 35000}, {20, 30000}, {20, 30000}, {20, 30000}};
  CHECK(inst.options_for(4) == four);
  CHECK(inst.network().predecessors(18) == std::vector<ActivityId>{16, 17});
}

TEST_CASE("missing indirect cost is reported when needed") {
  const auto inst = testsupport::table2();
  CHECK_FALSE(inst.has_indirect_cost());
  CHECK_THROWS_WITH_AS((void)inst.indirect_cost_per_day(), "indirect cost required", ModelError);
  CHECK(testsupport::table2(250).indirect_cost_per_day() == 250);
}

TEST_CASE("parse_tctp_instance errors") {
  CHECK_THROWS_WITH_AS(parse_tctp_instance(R"({"format":"tctp-v1","activities":[]})"), "empty instance", ParseError);
  const char* unknown = R"({"format":"tctp-v1","activities":[{"id":1,"depends":[7],"options":[{"duration":2,"cost":3}]}]})";
  CHECK_THROWS_AS(parse_tctp_instance(unknown), ParseError);
  const char* fractional =
      R"({"format":"tctp-v1","activities":[{"id":1,"options":[{"duration":2,"cost":3.5}]}]})";
  CHECK_THROWS_AS(parse_tctp_instance(fractional), ParseError);
  const char* six = R"({"format":"tctp-v1","activities":[{"id":1,"options":[
    {"duration":1,"cost":1},{"duration":2,"cost":1},{"duration":3,"cost":1},
    {"duration":4,"cost":1},{"duration":5,"cost":1},{"duration":6,"cost":1}]}]})";
  CHECK_THROWS_AS(parse_tctp_instance(six), ParseError);
  const char* with_i =
      R"({"format":"tctp-v1","indirect_cost_per_day":40,"activities":[{"id":1,"options":[{"duration":2,"cost":3}]}]})";
  CHECK(parse_tctp_instance(with_i).indirect_cost_per_day() == 40);
  CHECK(parse_tctp_instance(with_i, 7).indirect_cost_per_day() == 7);
}

TEST_CASE("validate_network") {
  CHECK(validate_network(testsupport::table1()).empty());

  const ProjectNetwork cyclic({{1, 2, 1}, {2, 3, 1}}, {{1, {2}}, {2, {1}}});
  const auto report = validate_network(cyclic);
  REQUIRE(has_kind(report, Violation::Kind::Cycle));
  const auto cycle = *std::find_if(report.begin(), report.end(),
                                   [](const Violation& v) { return v.kind == Violation::Kind::Cycle; });
  CHECK(std::find(cycle.ids.begin(), cycle.ids.end(), 1) != cycle.ids.end());
  CHECK(std::find(cycle.ids.begin(), cycle.ids.end(), 2) != cycle.ids.end());
  CHECK_FALSE(cyclic.is_acyclic());
  CHECK_THROWS_AS((void)cyclic.topological_order(), ModelError);

  const ProjectNetwork dangling({{1, 2, 1}, {2, 3, 1}}, {{2, {99}}});
  const auto d = validate_network(dangling);
  REQUIRE(has_kind(d, Violation::Kind::DanglingReference));
  CHECK(std::find(d.front().ids.begin(), d.front().ids.end(), 99) != d.front().ids.end());

  const ProjectNetwork dup({{1, 2, 1}, {1, 3, 1}}, {});
  CHECK(has_kind(validate_network(dup), Violation::Kind::DuplicateId));
  const ProjectNetwork self({{1, 2, 1}}, {{1, {1}}});
  CHECK(has_kind(validate_network(self), Violation::Kind::SelfLoop));
}

TEST_CASE("induced sub-network keeps internal edges only") {
  const auto sub = testsupport::table1().induced(std::vector<ActivityId>{1, 4, 7, 10});
  REQUIRE(sub.size() == 4);
  CHECK(sub.predecessors(7) == std::vector<ActivityId>{1});
  CHECK(sub.predecessors(10) == std::vector<ActivityId>{4});
  CHECK(validate_network(sub).empty());
}

TEST_CASE("parse_id_ranges") {
  CHECK(parse_id_ranges("1-6") == std::vector<ActivityId>{1, 2, 3, 4, 5, 6});
  CHECK(parse_id_ranges("1-3,7") == std::vector<ActivityId>{1, 2, 3, 7});
  CHECK(parse_id_ranges("5,1,3") == std::vector<ActivityId>{1, 3, 5});
  CHECK_THROWS(parse_id_ranges("x"));
  CHECK_THROWS(parse_id_ranges("4-2"));
}

TEST_CASE("TctpInstance mode vectors") {
  const auto inst = testsupport::table2();
  CHECK(inst.is_valid(inst.uniform_modes(5)));
  CHECK_FALSE(inst.is_valid(ModeVector{std::vector<int>(18, 6)}));
  CHECK_FALSE(inst.is_valid(ModeVector{std::vector<int>(17, 1)}));
  CHECK_THROWS_AS(inst.require_valid(ModeVector{std::vector<int>(18, 0)}), ModelError);
  const auto sub = inst.restricted(std::vector<ActivityId>{1, 2, 3});
  CHECK(sub.size() == 3);
}

TEST_CASE("serialization round trips") {
  const auto arcs = parse_aoa_instance(load_document("table1"));
  CHECK(parse_aoa_instance(serialize_aoa(arcs, "table1")) == arcs);
  const auto inst = testsupport::table2(120);
  CHECK(parse_tctp_instance(serialize_tctp(inst, "table2")) == inst);
}

TEST_CASE("data files match the embedded instances") {
  for (const char* name : {"table1", "table2"}) {
    const auto path = std::string(METASCHED_DATA_DIR) + "/" + name + ".json";
    const auto* b = find_bundled(name);
    REQUIRE(b != nullptr);
    CHECK(testsupport::read_text(path) == std::string(b->document));
  }
}

TEST_CASE("bundled catalogue") {
  const auto& cat = bundled_instances();
  REQUIRE(cat.size() == 2);
  CHECK(cat[0].name == "table1");
  CHECK(cat[0].activity_count == 17);
  CHECK(cat[1].name == "table2");
  CHECK(cat[1].activity_count == 18);
  CHECK(parse_aoa_instance(cat[0].document).size() == 17);
  CHECK(parse_tctp_instance(cat[1].document).size() == 18);
  CHECK(find_bundled("nope") == nullptr);
  CHECK(&bundled_instances() == &cat);
}
