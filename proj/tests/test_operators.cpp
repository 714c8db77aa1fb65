#include <doctest.h>

#include "metasched/operators.hpp"
#include "metasched/rcpsp.hpp"
#include "support.hpp"

using namespace metasched;
using namespace metasched::search;

TEST_CASE("order crossover fill rule") {
  const std::vector<ActivityId> p1{1, 2, 3, 4, 5}, p2{5, 4, 3, 2, 1};
  CHECK(order_crossover_raw(p1, p2, 1, 3) == std::vector<ActivityId>{5, 2, 3, 4, 1});
  CHECK(order_crossover_raw(p1, p1, 1, 3) == p1);
  CHECK(order_crossover_raw(p1, p1, 0, 0) == p1);
  CHECK(order_crossover_raw(p1, p2, 0, 5) == p1);
  CHECK(order_crossover_raw(p1, p2, 2, 2) == p2);
}

TEST_CASE("order crossover rejects mismatched parents and bad cuts") {
  const std::vector<ActivityId> p1{1, 2, 3}, other{1, 2, 4}, shorter{1, 2};
  CHECK_THROWS_AS(order_crossover_raw(p1, other, 0, 1), ModelError);
  CHECK_THROWS_AS(order_crossover_raw(p1, shorter, 0, 1), ModelError);
  CHECK_THROWS_AS(order_crossover_raw(p1, p1, 2, 1), ModelError);
  CHECK_THROWS_AS(order_crossover_raw(p1, p1, 0, 4), ModelError);
}

TEST_CASE("repaired crossover child is feasible") {
  const auto net = testsupport::table1();
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_activity_list(net, rng);
    const auto b = random_activity_list(net, rng);
    const std::size_t c1 = rng.index(18), c2 = rng.index(18);
    const auto child = order_crossover(net, a, b, std::min(c1, c2), std::max(c1, c2));
    REQUIRE(rcpsp::is_precedence_feasible(net, child));
  }
}

TEST_CASE("repair keeps feasible lists and is stable") {
  const ProjectNetwork chain({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}, {{2, {1}}, {3, {2}}});
  CHECK(repair_precedence(chain, std::vector<ActivityId>{1, 2, 3}) == std::vector<ActivityId>{1, 2, 3});
  CHECK(repair_precedence(chain, std::vector<ActivityId>{3, 2, 1}) == std::vector<ActivityId>{1, 2, 3});
  const ProjectNetwork free3({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}, {});
  CHECK(repair_precedence(free3, std::vector<ActivityId>{3, 1, 2}) == std::vector<ActivityId>{3, 1, 2});
}

TEST_CASE("neighbor_swap") {
  Rng rng(1);
  const ProjectNetwork two({{1, 1, 1}, {2, 1, 1}}, {});
  CHECK(neighbor_swap(two, std::vector<ActivityId>{1, 2}, rng) == std::vector<ActivityId>{2, 1});
  const ProjectNetwork chain({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}, {{2, {1}}, {3, {2}}});
  CHECK(neighbor_swap(chain, std::vector<ActivityId>{1, 2, 3}, rng) == std::vector<ActivityId>{1, 2, 3});
}

TEST_CASE("neighbor_swap changes exactly one adjacent pair") {
  const auto net = testsupport::table1();
  const PrecedenceIndex prec(net);
  Rng rng(11);
  auto list = rcpsp::topological_list(net);
  for (int k = 0; k < 200; ++k) {
    const auto next = neighbor_swap(prec, list, rng);
    std::size_t diffs = 0, first = 0;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (list[i] != next[i]) {
        if (!diffs) first = i;
        ++diffs;
      }
    REQUIRE(diffs == 2);
    CHECK(next[first] == list[first + 1]);
    CHECK(next[first + 1] == list[first]);
    list = next;
  }
}

TEST_CASE("neighbor_mode_change") {
  Rng rng(5);
  const TctpInstance two(ProjectNetwork({{1, 1, 1}, {2, 1, 1}}, {}),
                         {std::vector<ActivityOption>(5, {2, 2}), std::vector<ActivityOption>(5, {2, 2})},
                         std::nullopt);
  for (int k = 0; k < 50; ++k) {
    const auto next = neighbor_mode_change(two, ModeVector{{1, 1}}, rng);
    CHECK((next.choices[0] != 1) + (next.choices[1] != 1) == 1);
  }
  const TctpInstance single(ProjectNetwork({{1, 1, 1}, {2, 1, 1}}, {}), {{{2, 2}}, {{3, 3}}}, std::nullopt);
  CHECK(neighbor_mode_change(single, ModeVector{{1, 1}}, rng) == ModeVector{{1, 1}});
}

TEST_CASE("random constructors produce valid candidates") {
  Rng rng(8);
  const auto net = testsupport::table1();
  const auto inst = testsupport::table2();
  for (int k = 0; k < 100; ++k) {
    CHECK(rcpsp::is_precedence_feasible(net, random_activity_list(net, rng)));
    CHECK(inst.is_valid(random_modes(inst, rng)));
  }
}

TEST_CASE("Rng draws stay in range") {
  Rng rng(42);
  for (int k = 0; k < 1000; ++k) {
    CHECK(rng.below(7) < 7);
    const int v = rng.between(-2, 2);
    CHECK((v >= -2 && v <= 2));
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
  }
  Rng a(9), b(9);
  for (int k = 0; k < 10; ++k) CHECK(a.next() == b.next());
}
