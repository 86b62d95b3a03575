#include "adapt_meter/process_model.hpp"

#include <algorithm>
#include <charconv>

#include "adapt_meter/error.hpp"

namespace adapt_meter {

std::string_view to_string(ActivityKind kind) {
  switch (kind) {
    case ActivityKind::kReceive:
      return "receive";
    case ActivityKind::kInvoke:
      return "invoke";
    case ActivityKind::kReply:
      return "reply";
    case ActivityKind::kAssign:
      return "assign";
    case ActivityKind::kSequence:
      return "sequence";
    case ActivityKind::kSwitch:
      return "switch";
    case ActivityKind::kPick:
      return "pick";
    case ActivityKind::kFlow:
      return "flow";
    case ActivityKind::kWhile:
      return "while";
  }
  return "?";
}

std::optional<ActivityKind> activity_kind_from_string(std::string_view text) {
  for (ActivityKind kind : kAllActivityKinds) {
    if (to_string(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(AdviceType type) {
  switch (type) {
    case AdviceType::kBefore:
      return "before";
    case AdviceType::kAround:
      return "around";
    case AdviceType::kAfter:
      return "after";
  }
  return "?";
}

std::optional<AdviceType> advice_type_from_string(std::string_view text) {
  for (AdviceType type : kAllAdviceTypes) {
    if (to_string(type) == text) return type;
  }
  return std::nullopt;
}

std::string_view to_string(BranchKind kind) {
  switch (kind) {
    case BranchKind::kCase:
      return "case";
    case BranchKind::kOtherwise:
      return "otherwise";
    case BranchKind::kOnMessage:
      return "onMessage";
    case BranchKind::kOnAlarm:
      return "onAlarm";
  }
  return "?";
}

std::string BranchLabel::text() const {
  std::string out(to_string(kind));
  if (attributes.empty()) return out;
  out += '[';
  bool first = true;
  for (const auto& [key, value] : attributes) {
    if (!first) out += ", ";
    first = false;
    out += key;
    out += '=';
    out += value;
  }
  out += ']';
  return out;
}

std::optional<std::string_view> Activity::attribute(std::string_view key) const {
  if (key == "name") {
    if (name) return std::string_view(*name);
    return std::nullopt;
  }
  if (auto it = attributes.find(key); it != attributes.end()) {
    return std::string_view(it->second);
  }
  return std::nullopt;
}

ActivityPath ActivityPath::child(ActivityKind kind, std::size_t index) const {
  std::vector<PathStep> steps = steps_;
  steps.push_back({kind, index});
  return ActivityPath(std::move(steps));
}

ActivityPath ActivityPath::parent() const {
  std::vector<PathStep> steps = steps_;
  if (!steps.empty()) steps.pop_back();
  return ActivityPath(std::move(steps));
}

std::string ActivityPath::to_string() const {
  std::string out = "/process";
  for (const PathStep& step : steps_) {
    out += '/';
    out += adapt_meter::to_string(step.kind);
    out += '[';
    out += std::to_string(step.index);
    out += ']';
  }
  return out;
}

std::optional<ActivityPath> ActivityPath::parse(std::string_view text) {
  constexpr std::string_view kPrefix = "/process";
  if (text.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  text.remove_prefix(kPrefix.size());
  std::vector<PathStep> steps;
  while (!text.empty()) {
    if (text.front() != '/') return std::nullopt;
    text.remove_prefix(1);
    auto open = text.find('[');
    auto close = text.find(']');
    if (open == std::string_view::npos || close == std::string_view::npos ||
        close < open) {
      return std::nullopt;
    }
    auto kind = activity_kind_from_string(text.substr(0, open));
    if (!kind) return std::nullopt;
    std::size_t index = 0;
    const char* first = text.data() + open + 1;
    const char* last = text.data() + close;
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
    steps.push_back({*kind, index});
    text.remove_prefix(close + 1);
  }
  if (steps.empty()) return std::nullopt;
  return ActivityPath(std::move(steps));
}

std::strong_ordering operator<=>(const ActivityPath& a, const ActivityPath& b) {
  const std::size_t common = std::min(a.steps_.size(), b.steps_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = a.steps_[i].index <=> b.steps_[i].index; c != 0) return c;
    if (auto c = a.steps_[i].kind <=> b.steps_[i].kind; c != 0) return c;
  }
  return a.steps_.size() <=> b.steps_.size();
}

void validate_activity(const Activity& activity) {
  const auto where = [&] {
    return activity.line ? " (line " + std::to_string(activity.line) + ")"
                          : std::string();
  };
  if (is_basic(activity.kind)) {
    if (!activity.children.empty()) {
      throw Error(ErrorCode::kStructuralError,
                  "basic activity <" + std::string(to_string(activity.kind)) +
                      "> cannot have child activities" + where(),
                  activity.line);
    }
    return;
  }
  if (is_branching(activity.kind)) {
    const std::string kind(to_string(activity.kind));
    if (activity.children.empty()) {
      throw Error(ErrorCode::kStructuralError,
                  "<" + kind + "> needs at least one branch" + where(),
                  activity.line);
    }
    if (activity.branches.size() != activity.children.size()) {
      throw Error(ErrorCode::kStructuralError,
                  "<" + kind + "> has unlabeled branches" + where(),
                  activity.line);
    }
    int otherwise = 0;
    for (const BranchLabel& label : activity.branches) {
      const bool ok =
          activity.kind == ActivityKind::kSwitch
              ? (label.kind == BranchKind::kCase ||
                 label.kind == BranchKind::kOtherwise)
              : (label.kind == BranchKind::kOnMessage ||
                 label.kind == BranchKind::kOnAlarm);
      if (!ok) {
        throw Error(ErrorCode::kStructuralError,
                    "<" + std::string(to_string(label.kind)) +
                        "> branch is not allowed in <" + kind + ">" + where(),
                    activity.line);
      }
      if (label.kind == BranchKind::kOtherwise) ++otherwise;
    }
    if (otherwise > 1) {
      throw Error(ErrorCode::kStructuralError,
                  "<switch> has more than one <otherwise>" + where(),
                  activity.line);
    }
  } else if (!activity.branches.empty()) {
    throw Error(ErrorCode::kStructuralError,
                "branch labels are only valid on switch and pick" + where(),
                activity.line);
  }
  for (const Activity& child : activity.children) validate_activity(child);
}

ProcessModel::ProcessModel(std::string name, Activity root,
                           Attributes attributes,
                           std::vector<Declaration> partner_links,
                           std::vector<Declaration> variables)
    : name_(std::move(name)),
      attributes_(std::move(attributes)),
      partner_links_(std::move(partner_links)),
      variables_(std::move(variables)),
      root_(std::move(root)) {
  if (name_.empty()) {
    throw Error(ErrorCode::kStructuralError, "process name must not be empty");
  }
  if (!is_structured(root_.kind)) {
    throw Error(ErrorCode::kStructuralError,
                "process root must be a structured activity, found <" +
                    std::string(to_string(root_.kind)) + ">",
                root_.line);
  }
  attributes_.erase("name");
  validate_activity(root_);
}

std::optional<std::string_view> ProcessModel::attribute(
    std::string_view key) const {
  if (key == "name") return std::string_view(name_);
  if (auto it = attributes_.find(key); it != attributes_.end()) {
    return std::string_view(it->second);
  }
  return std::nullopt;
}

std::string_view to_string(CountMode mode) {
  return mode == CountMode::kSet ? "set" : "raw-clamped";
}

std::optional<CountMode> count_mode_from_string(std::string_view text) {
  if (text == "set") return CountMode::kSet;
  if (text == "raw-clamped") return CountMode::kRawClamped;
  return std::nullopt;
}

void AnalysisConfig::validate() const {
  if (reference_value < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "reference value must be >= 1, got " +
                    std::to_string(reference_value));
  }
  if (join_point_kinds.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "join point set must not be empty");
  }
  for (ActivityKind kind : join_point_kinds) {
    if (!is_basic(kind)) {
      throw Error(ErrorCode::kInvalidConfig,
                  "join points must be basic activities, got " +
                      std::string(to_string(kind)));
    }
  }
}

namespace {

void visit(const Activity& activity, const ActivityPath& path,
           std::vector<VisitedActivity>& out) {
  out.push_back({path, &activity});
  for (std::size_t i = 0; i < activity.children.size(); ++i) {
    const Activity& child = activity.children[i];
    visit(child, path.child(child.kind, i), out);
  }
}

}  // namespace

std::vector<VisitedActivity> iter_activities(const ProcessModel& process) {
  std::vector<VisitedActivity> out;
  out.reserve(count_nodes(process.root()));
  visit(process.root(), ActivityPath::root(process.root().kind), out);
  return out;
}

const Activity* resolve(const ProcessModel& process, const ActivityPath& path) {
  const auto& steps = path.steps();
  if (steps.empty()) return nullptr;
  const Activity* node = &process.root();
  if (steps[0].index != 0 || steps[0].kind != node->kind) return nullptr;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    if (steps[i].index >= node->children.size()) return nullptr;
    node = &node->children[steps[i].index];
    if (node->kind != steps[i].kind) return nullptr;
  }
  return node;
}

bool is_join_point(const Activity& activity, const AnalysisConfig& config) {
  return config.join_point_kinds.contains(activity.kind);
}

bool is_eligible_child(const Activity& activity, const AnalysisConfig& config) {
  if (is_join_point(activity, config)) return true;
  if (is_basic(activity.kind)) return false;
  return std::any_of(
      activity.children.begin(), activity.children.end(),
      [&](const Activity& child) { return is_eligible_child(child, config); });
}

std::size_t count_nodes(const Activity& activity) {
  std::size_t n = 1;
  for (const Activity& child : activity.children) n += count_nodes(child);
  return n;
}

}  // namespace adapt_meter
