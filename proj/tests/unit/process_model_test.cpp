#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "random_process.hpp"

namespace adapt_meter {
namespace {

using testing::load_process_fixture;
using testing::process_from_string;

Activity leaf(ActivityKind kind) {
  Activity a;
  a.kind = kind;
  return a;
}

Activity node(ActivityKind kind, std::vector<Activity> children) {
  Activity a;
  a.kind = kind;
  a.children = std::move(children);
  if (is_branching(kind)) {
    for (std::size_t i = 0; i < a.children.size(); ++i) {
      a.branches.push_back({kind == ActivityKind::kSwitch ? BranchKind::kCase
                                                          : BranchKind::kOnMessage,
                            {}});
    }
  }
  return a;
}

TEST(ProcessModelTest, LinearTravelBookingPreOrder) {
  const ProcessModel process = load_process_fixture("travel_booking_linear.bpel");
  const auto nodes = iter_activities(process);
  ASSERT_EQ(nodes.size(), 7u);
  const std::vector<ActivityKind> expected = {
      ActivityKind::kSequence, ActivityKind::kReceive, ActivityKind::kAssign,
      ActivityKind::kInvoke,   ActivityKind::kInvoke,  ActivityKind::kAssign,
      ActivityKind::kReply};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    EXPECT_EQ(nodes[i].activity->kind, expected[i]) << i;
  }
  EXPECT_EQ(nodes.front().activity, &process.root());
  EXPECT_EQ(nodes[3].path.to_string(), "/process/sequence[0]/invoke[2]");
}

TEST(ProcessModelTest, RootOnlyProcessHasOneNode) {
  const ProcessModel process("p", leaf(ActivityKind::kSequence));
  const auto nodes = iter_activities(process);
  ASSERT_EQ(nodes.size(), 1u);
  EXPECT_EQ(nodes[0].path.to_string(), "/process/sequence[0]");
}

TEST(ProcessModelTest, RandomTreesYieldDistinctResolvablePaths) {
  testing::RandomProcessGenerator gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ProcessModel process = gen.process();
    const auto nodes = iter_activities(process);
    EXPECT_EQ(nodes.size(), count_nodes(process.root()));
    EXPECT_LE(nodes.size(), 20u);
    std::set<ActivityPath> seen;
    for (const auto& [path, activity] : nodes) {
      EXPECT_TRUE(seen.insert(path).second) << path.to_string();
      EXPECT_EQ(resolve(process, path), activity);
      EXPECT_EQ(ActivityPath::parse(path.to_string()), path);
    }
    // ActivityPath ordering is pre-order.
    EXPECT_TRUE(std::is_sorted(nodes.begin(), nodes.end(),
                               [](const auto& a, const auto& b) { return a.path < b.path; }));
  }
}

TEST(ProcessModelTest, ResolveRejectsForeignPaths) {
  const ProcessModel process = load_process_fixture("travel_booking_linear.bpel");
  EXPECT_EQ(resolve(process, *ActivityPath::parse("/process/sequence[0]/invoke[9]")), nullptr);
  EXPECT_EQ(resolve(process, *ActivityPath::parse("/process/sequence[0]/reply[2]")), nullptr);
  EXPECT_EQ(resolve(process, *ActivityPath::parse("/process/flow[0]")), nullptr);
  EXPECT_FALSE(ActivityPath::parse("/process/sequence[x]"));
  EXPECT_FALSE(ActivityPath::parse("/proc/sequence[0]"));
  EXPECT_FALSE(ActivityPath::parse("/process/loop[0]"));
}

TEST(ProcessModelTest, JoinPointsFollowConfig) {
  const AnalysisConfig config;
  EXPECT_TRUE(is_join_point(leaf(ActivityKind::kInvoke), config));
  EXPECT_TRUE(is_join_point(leaf(ActivityKind::kReceive), config));
  EXPECT_TRUE(is_join_point(leaf(ActivityKind::kReply), config));
  EXPECT_FALSE(is_join_point(leaf(ActivityKind::kAssign), config));

  AnalysisConfig receive_only;
  receive_only.join_point_kinds = {ActivityKind::kReceive};
  EXPECT_FALSE(is_join_point(leaf(ActivityKind::kInvoke), receive_only));
}

TEST(ProcessModelTest, EligibleChildren) {
  const AnalysisConfig config;
  const Activity sw = node(ActivityKind::kSwitch,
                           {leaf(ActivityKind::kInvoke), leaf(ActivityKind::kInvoke)});
  EXPECT_TRUE(is_eligible_child(sw, config));
  EXPECT_FALSE(is_eligible_child(leaf(ActivityKind::kAssign), config));
  const Activity inert = node(ActivityKind::kFlow,
                              {leaf(ActivityKind::kAssign), leaf(ActivityKind::kAssign)});
  EXPECT_FALSE(is_eligible_child(inert, config));
  const Activity deep = node(ActivityKind::kWhile, {node(ActivityKind::kSequence, {inert,
      node(ActivityKind::kPick, {leaf(ActivityKind::kReply)})})});
  EXPECT_TRUE(is_eligible_child(deep, config));
}

TEST(ProcessModelTest, EligibilityMatchesDescendantScan) {
  testing::RandomProcessGenerator gen(11);
  const AnalysisConfig config;
  for (int trial = 0; trial < 200; ++trial) {
    const ProcessModel process = gen.process();
    const auto nodes = iter_activities(process);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Activity& a = *nodes[i].activity;
      if (is_join_point(a, config)) {
        EXPECT_TRUE(is_eligible_child(a, config));
        continue;
      }
      if (is_basic(a.kind)) continue;
      // Descendants are the following nodes whose path extends this one.
      bool has_join_point = false;
      const auto& prefix = nodes[i].path.steps();
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const auto& steps = nodes[j].path.steps();
        if (steps.size() <= prefix.size() ||
            !std::equal(prefix.begin(), prefix.end(), steps.begin())) {
          break;
        }
        has_join_point |= is_join_point(*nodes[j].activity, config);
      }
      EXPECT_EQ(is_eligible_child(a, config), has_join_point);
    }
  }
}

TEST(ProcessModelTest, ConstructorEnforcesInvariants) {
  EXPECT_THROW(ProcessModel("p", leaf(ActivityKind::kInvoke)), Error);
  EXPECT_THROW(ProcessModel("", leaf(ActivityKind::kSequence)), Error);
  Activity bad_basic = leaf(ActivityKind::kInvoke);
  bad_basic.children.push_back(leaf(ActivityKind::kReply));
  EXPECT_THROW(ProcessModel("p", node(ActivityKind::kSequence, {bad_basic})), Error);
  EXPECT_THROW(ProcessModel("p", node(ActivityKind::kSwitch, {})), Error);

  Activity two_otherwise = node(ActivityKind::kSwitch, {leaf(ActivityKind::kInvoke),
                                                        leaf(ActivityKind::kInvoke)});
  two_otherwise.branches = {{BranchKind::kOtherwise, {}}, {BranchKind::kOtherwise, {}}};
  try {
    ProcessModel("p", two_otherwise);
    FAIL() << "expected StructuralError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructuralError);
  }

  Activity pick_with_case = node(ActivityKind::kPick, {leaf(ActivityKind::kInvoke)});
  pick_with_case.branches = {{BranchKind::kCase, {}}};
  EXPECT_THROW(ProcessModel("p", pick_with_case), Error);
}

TEST(ProcessModelTest, ConfigValidation) {
  AnalysisConfig config;
  EXPECT_NO_THROW(config.validate());
  config.reference_value = 0;
  EXPECT_THROW(config.validate(), Error);
  config = {};
  config.join_point_kinds.clear();
  EXPECT_THROW(config.validate(), Error);
  config.join_point_kinds = {ActivityKind::kSequence};
  EXPECT_THROW(config.validate(), Error);
  config.join_point_kinds = {ActivityKind::kAssign};
  EXPECT_NO_THROW(config.validate());
}

TEST(ProcessModelTest, ParsedModelIsEqualToHandBuilt) {
  const ProcessModel parsed = process_from_string(
      R"(<process name="p"><flow><invoke name="a" operation="x"/></flow></process>)");
  Activity invoke = leaf(ActivityKind::kInvoke);
  invoke.name = "a";
  invoke.attributes["operation"] = "x";
  EXPECT_EQ(parsed, ProcessModel("p", node(ActivityKind::kFlow, {invoke})));
}

}  // namespace
}  // namespace adapt_meter
