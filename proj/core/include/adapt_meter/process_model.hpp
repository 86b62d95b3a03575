#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace adapt_meter {

enum class ActivityKind {
  // basic
  kReceive,
  kInvoke,
  kReply,
  kAssign,
  // structured
  kSequence,
  kSwitch,
  kPick,
  kFlow,
  kWhile,
};

inline constexpr ActivityKind kAllActivityKinds[] = {
    ActivityKind::kReceive,  ActivityKind::kInvoke, ActivityKind::kReply,
    ActivityKind::kAssign,   ActivityKind::kSequence, ActivityKind::kSwitch,
    ActivityKind::kPick,     ActivityKind::kFlow,   ActivityKind::kWhile,
};

std::string_view to_string(ActivityKind kind);
std::optional<ActivityKind> activity_kind_from_string(std::string_view text);

constexpr bool is_structured(ActivityKind kind) {
  return kind >= ActivityKind::kSequence;
}
constexpr bool is_basic(ActivityKind kind) { return !is_structured(kind); }

// Switch and pick choose exactly one branch per execution.
constexpr bool is_branching(ActivityKind kind) {
  return kind == ActivityKind::kSwitch || kind == ActivityKind::kPick;
}

enum class AdviceType { kBefore, kAround, kAfter };

inline constexpr AdviceType kAllAdviceTypes[] = {
    AdviceType::kBefore, AdviceType::kAround, AdviceType::kAfter};

std::string_view to_string(AdviceType type);
std::optional<AdviceType> advice_type_from_string(std::string_view text);

using Attributes = std::map<std::string, std::string, std::less<>>;

enum class BranchKind { kCase, kOtherwise, kOnMessage, kOnAlarm };

std::string_view to_string(BranchKind kind);

// The wrapper element around one switch/pick branch. Conditions and event
// descriptors are kept as opaque text and never evaluated.
struct BranchLabel {
  BranchKind kind = BranchKind::kCase;
  Attributes attributes;

  // "case[condition=...]", "otherwise", "onMessage[operation=...]" ...
  std::string text() const;

  friend bool operator==(const BranchLabel&, const BranchLabel&) = default;
};

struct Activity {
  ActivityKind kind = ActivityKind::kSequence;
  std::optional<std::string> name;
  // Every attribute except `name`.
  Attributes attributes;
  std::vector<Activity> children;
  // Parallel to `children` for switch and pick, empty otherwise.
  std::vector<BranchLabel> branches;
  // Source line of the element, 0 when built in memory. Not compared.
  std::size_t line = 0;

  // Looks up `name` or any other attribute.
  std::optional<std::string_view> attribute(std::string_view key) const;

  friend bool operator==(const Activity& a, const Activity& b) {
    return a.kind == b.kind && a.name == b.name &&
           a.attributes == b.attributes && a.children == b.children &&
           a.branches == b.branches;
  }
};

struct Declaration {
  std::string name;
  Attributes attributes;  // excluding `name`

  friend bool operator==(const Declaration&, const Declaration&) = default;
};

struct PathStep {
  ActivityKind kind;
  std::size_t index;  // position among the parent's children

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

// Address of one activity, e.g. /process/sequence[0]/switch[2]/invoke[0].
// Ordering compares sibling indices first, which is tree pre-order.
class ActivityPath {
 public:
  ActivityPath() = default;
  explicit ActivityPath(std::vector<PathStep> steps) : steps_(std::move(steps)) {}

  static ActivityPath root(ActivityKind kind) { return ActivityPath({{kind, 0}}); }

  ActivityPath child(ActivityKind kind, std::size_t index) const;
  ActivityPath parent() const;

  const std::vector<PathStep>& steps() const { return steps_; }
  std::size_t depth() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  ActivityKind kind() const { return steps_.back().kind; }

  std::string to_string() const;
  static std::optional<ActivityPath> parse(std::string_view text);

  friend bool operator==(const ActivityPath&, const ActivityPath&) = default;
  friend std::strong_ordering operator<=>(const ActivityPath& a,
                                          const ActivityPath& b);

 private:
  std::vector<PathStep> steps_;
};

// A parsed BPEL process. Validated on construction and immutable afterwards.
class ProcessModel {
 public:
  ProcessModel(std::string name, Activity root, Attributes attributes = {},
               std::vector<Declaration> partner_links = {},
               std::vector<Declaration> variables = {});

  const std::string& name() const { return name_; }
  const Attributes& attributes() const { return attributes_; }
  const std::vector<Declaration>& partner_links() const { return partner_links_; }
  const std::vector<Declaration>& variables() const { return variables_; }
  const Activity& root() const { return root_; }

  // `name` or another attribute of the <process> element.
  std::optional<std::string_view> attribute(std::string_view key) const;

  friend bool operator==(const ProcessModel&, const ProcessModel&) = default;

 private:
  std::string name_;
  Attributes attributes_;
  std::vector<Declaration> partner_links_;
  std::vector<Declaration> variables_;
  Activity root_;
};

// Throws Error(kStructuralError) if the subtree breaks the kind/children
// rules (basic with children, empty or mislabeled switch/pick branches).
void validate_activity(const Activity& activity);

enum class CountMode { kSet, kRawClamped };

std::string_view to_string(CountMode mode);
std::optional<CountMode> count_mode_from_string(std::string_view text);

struct AnalysisConfig {
  int reference_value = 3;
  std::set<ActivityKind> join_point_kinds = {
      ActivityKind::kReceive, ActivityKind::kInvoke, ActivityKind::kReply};
  CountMode count_mode = CountMode::kSet;
  bool include_disabled_aspects = false;

  // Throws Error(kInvalidConfig).
  void validate() const;
};

struct VisitedActivity {
  ActivityPath path;
  const Activity* activity;
};

// Depth-first pre-order, root first. Pointers refer into `process`.
std::vector<VisitedActivity> iter_activities(const ProcessModel& process);

// nullptr if the path does not address a node of this process.
const Activity* resolve(const ProcessModel& process, const ActivityPath& path);

bool is_join_point(const Activity& activity, const AnalysisConfig& config);

// Whether the activity counts in a sequence/flow/while divisor: a join point,
// or a structured activity with a join point somewhere below it.
bool is_eligible_child(const Activity& activity, const AnalysisConfig& config);

std::size_t count_nodes(const Activity& activity);

}  // namespace adapt_meter
