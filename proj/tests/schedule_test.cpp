#include "gpm/schedule.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gpm/generators.hpp"
#include "gpm/matcher.hpp"
#include "gpm/suite.hpp"
#include "oracles.hpp"

namespace gpm {
namespace {

// House: A=0 B=1 C=2 D=3 E=4.
const Pattern& house() {
  static const Pattern p = parse_pattern("5:0-1,0-2,0-4,1-3,1-4,2-3");
  return p;
}

TEST(GenerateSchedules, TriangleKeepsAllSix) { EXPECT_EQ(generate_schedules(parse_pattern("3:0-1,1-2,0-2")).size(), 6u); }

TEST(GenerateSchedules, HouseTailIsAnIndependentPairAgainstTheRoof) {
  const auto schedules = generate_schedules(house());
  ASSERT_FALSE(schedules.empty());
  for (const auto& s : schedules) {
    std::set<int> tail{s.order[3], s.order[4]};
    // The symmetry swapping A<->B, C<->D maps a {D,E} tail to a {C,E} tail.
    EXPECT_TRUE(tail == std::set<int>({3, 4}) || tail == std::set<int>({2, 4})) << s.order[3] << "," << s.order[4];
  }
}

TEST(GenerateSchedules, HouseStartingCDERejected) {
  EXPECT_FALSE(satisfies_connectivity(house(), Schedule{{2, 3, 4, 0, 1}}));
  for (const auto& s : generate_schedules(house())) {
    EXPECT_FALSE(s.order[0] == 2 && s.order[1] == 3 && s.order[2] == 4);
  }
}

TEST(GenerateSchedules, ExactlyTheOrdersPassingBothFilters) {
  for (const auto& np : pattern_suite()) {
    const auto p = np.pattern();
    EXPECT_EQ(generate_schedules(p), oracles::schedules_by_enumeration(p)) << np.name;
  }
}

TEST(GenerateSchedules, TailWidthMatchesIndependenceWhereReachable) {
  EXPECT_EQ(schedulable_tail_width(house()), 2);
  EXPECT_EQ(schedulable_tail_width(find_suite_pattern("cycle6-tri")->pattern()), 3);
  EXPECT_EQ(schedulable_tail_width(parse_pattern("4:0-1,1-2,2-3,3-0")), 1);
  EXPECT_EQ(parse_pattern("4:0-1,1-2,2-3,3-0").independence_number(), 2);
}

TEST(BfsSchedule, AlwaysConnected) {
  for (const auto& np : pattern_suite()) EXPECT_TRUE(satisfies_connectivity(np.pattern(), bfs_schedule(np.pattern())));
}

TEST(BuildLoopPlan, HouseRoofIntersectsAandB) {
  const auto plan = build_loop_plan(house(), Schedule{{0, 1, 2, 3, 4}}, RestrictionSet{{0, 1}});
  ASSERT_EQ(plan.loops.size(), 5u);
  EXPECT_EQ(plan.loops[4].parents, (std::vector<int>{0, 1}));
  EXPECT_EQ(plan.loops[1].checks, (std::vector<Restriction>{{0, 1}}));
  for (int i : {0, 2, 3, 4}) EXPECT_TRUE(plan.loops[static_cast<std::size_t>(i)].checks.empty());
  EXPECT_TRUE(plan.loops[0].parents.empty());
}

TEST(BuildLoopPlan, TriangleChainSplitsAcrossLoops) {
  const auto plan = build_loop_plan(parse_pattern("3:0-1,1-2,0-2"), Schedule{{0, 1, 2}}, RestrictionSet{{0, 1}, {1, 2}});
  EXPECT_EQ(plan.loops[1].checks, (std::vector<Restriction>{{0, 1}}));
  EXPECT_EQ(plan.loops[2].checks, (std::vector<Restriction>{{1, 2}}));
  EXPECT_EQ(plan.to_string(), "L0: v=0 cand=∩{} res=[]\nL1: v=1 cand=∩{0} res=[v0 > v1]\nL2: v=2 cand=∩{0,1} res=[v1 > v2]\n");
}

TEST(BuildLoopPlan, TriangleWithEarsTailSetsArePairIntersections) {
  // Outer triangle 0,2,4; ears 1, 3, 5 each hang off one triangle edge.
  const auto p = find_suite_pattern("cycle6-tri")->pattern();
  const auto plan = build_loop_plan(p, Schedule{{0, 2, 4, 1, 3, 5}}, RestrictionSet{});
  EXPECT_EQ(plan.loops[3].parents, (std::vector<int>{0, 1}));
  EXPECT_EQ(plan.loops[4].parents, (std::vector<int>{1, 2}));
  EXPECT_EQ(plan.loops[5].parents, (std::vector<int>{0, 2}));
  EXPECT_EQ(tail_width(p, Schedule{{0, 2, 4, 1, 3, 5}}), 3);
}

TEST(EnumerateConfigurations, CrossProductSizes) {
  for (const char* name : {"triangle", "rectangle", "house", "house-tail"}) {
    const auto p = find_suite_pattern(name)->pattern();
    EXPECT_EQ(enumerate_configurations(p).size(), generate_schedules(p).size() * res_set_generation(p).size()) << name;
  }
}

TEST(EnumerateConfigurations, AsymmetricPatternCarriesEmptySet) {
  const auto p = find_suite_pattern("house-tail")->pattern();
  ASSERT_EQ(automorphisms(p).size(), 1u);
  const auto configs = enumerate_configurations(p);
  EXPECT_EQ(configs.size(), generate_schedules(p).size());
  for (const auto& c : configs) EXPECT_TRUE(c.restrictions.empty());
}

TEST(EnumerateConfigurations, RectangleEveryConfigCountsThreeOnK4) {
  const auto k4 = complete_graph(4);
  const auto p = find_suite_pattern("rectangle")->pattern();
  for (const auto& c : enumerate_configurations(p)) EXPECT_EQ(match(k4, p, c).count, 3u);
}

}  // namespace
}  // namespace gpm
