#include <doctest.h>

#include "metasched/oracle.hpp"
#include "metasched/tctp.hpp"
#include "support.hpp"

using namespace metasched;
using namespace metasched::oracle;

TEST_CASE("longest_path_makespan") {
  CHECK(longest_path_makespan(testsupport::table1()) == 126);
  const auto inst = testsupport::table2();
  CHECK(longest_path_makespan(inst.network(), inst.durations_for(inst.uniform_modes(4))) == 166);
  const ProjectNetwork one({{1, 7, 1}}, {});
  CHECK(longest_path_makespan(one) == 7);
  const ProjectNetwork cyclic({{1, 2, 1}, {2, 3, 1}}, {{1, {2}}, {2, {1}}});
  CHECK_THROWS_AS(longest_path_makespan(cyclic), ModelError);
}

TEST_CASE("exhaustive_tctp on one activity") {
  const TctpInstance inst(ProjectNetwork({{1, 5, 1}}, {}), {{{5, 10}, {7, 3}}}, std::nullopt);
  const auto r = exhaustive_tctp(inst);
  REQUIRE(r.front.size() == 2);
  CHECK(r.front[0] == FrontPoint{5, 10, {1}});
  CHECK(r.front[1] == FrontPoint{7, 3, {2}});
  CHECK(r.combinations == 2);
  CHECK_FALSE(r.min_total_cost.has_value());
}

TEST_CASE("exhaustive_tctp on the first six activities") {
  const auto sub = testsupport::table2().restricted(parse_id_ranges("1-6"));
  const auto r = exhaustive_tctp(sub, {}, 0);
  CHECK(r.combinations == 15625);
  CHECK(*r.min_total_cost == tctp::min_direct_cost(sub));
  const std::vector<std::pair<int, Money>> expected{{36, 88600}, {37, 88350}, {38, 72100}, {39, 71850},
                                                     {40, 71600}, {42, 69600}, {43, 69350}, {44, 64600},
                                                     {45, 64350}, {46, 64100}, {51, 63700}, {54, 63400}};
  REQUIRE(r.front.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(r.front[i].duration == expected[i].first);
    CHECK(r.front[i].direct_cost == expected[i].second);
    CHECK(tctp::evaluate_mode_vector(sub, ModeVector{r.front[i].modes}, 0).direct_cost == expected[i].second);
  }
}

TEST_CASE("exhaustive_tctp at zero indirect cost equals the cheapest options") {
  const auto sub = testsupport::table2().restricted(parse_id_ranges("10-15"));
  CHECK(*exhaustive_tctp(sub, {}, 0).min_total_cost == tctp::min_direct_cost(sub));
}

TEST_CASE("guards refuse large instances") {
  CHECK_THROWS_AS(exhaustive_tctp(testsupport::table2()), GuardExceeded);
  CHECK_THROWS_AS(exhaustive_rcpsp(testsupport::table1(), 7), GuardExceeded);
  OracleGuard tiny{10, 100};
  const auto sub = testsupport::table2().restricted(parse_id_ranges("1-6"));
  CHECK_THROWS_AS(exhaustive_tctp(sub, tiny), GuardExceeded);
}

TEST_CASE("exhaustive_rcpsp") {
  const ProjectNetwork two({{1, 3, 1}, {2, 4, 1}}, {});
  CHECK(exhaustive_rcpsp(two, 1).makespan == 7);
  const auto net = testsupport::table1().induced(parse_id_ranges("1-8"));
  CHECK(exhaustive_rcpsp(net, 100).makespan == longest_path_makespan(net));
  const auto at3 = exhaustive_rcpsp(net, 3);
  CHECK(at3.makespan >= longest_path_makespan(net));
  CHECK(reference_serial_sgs(net, 3, at3.best_list).size() == 8);
  CHECK_THROWS_AS(exhaustive_rcpsp(two, 0), ModelError);
}

TEST_CASE("reference_serial_sgs") {
  const ProjectNetwork net({{1, 4, 1}, {2, 4, 1}, {3, 4, 1}}, {});
  const std::vector<ActivityId> list{3, 2, 1};
  const auto s = reference_serial_sgs(net, 1, list);
  CHECK(s.at(3) == 0);
  CHECK(s.at(2) == 4);
  CHECK(s.at(1) == 8);
  const ProjectNetwork chain({{1, 1, 1}, {2, 1, 1}}, {{2, {1}}});
  CHECK_THROWS_AS(reference_serial_sgs(chain, 1, std::vector<ActivityId>{2, 1}), ModelError);
}
