#include "adapt_meter/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "adapt_meter/error.hpp"

namespace adapt_meter {

int variability_value(const VariabilityProfile& profile, const ActivityPath& path,
                      const AnalysisConfig& config) {
  if (path.empty() || !config.join_point_kinds.contains(path.kind())) {
    throw Error(ErrorCode::kNotAJoinPoint,
                path.to_string() + " is not a join point under this configuration");
  }
  if (config.count_mode == CountMode::kSet) {
    auto it = profile.entries.find(path);
    return it == profile.entries.end() ? 0 : static_cast<int>(it->second.size());
  }
  auto it = profile.raw_counts.find(path);
  if (it == profile.raw_counts.end()) return 0;
  int total = 0;
  for (const auto& [type, count] : it->second) total += count;
  return std::min(total, config.reference_value);
}

double variability_degree(int vv, int reference_value) {
  if (reference_value < 1) {
    throw Error(ErrorCode::kInvalidConfig, "reference value must be >= 1");
  }
  if (vv > reference_value) {
    throw Error(ErrorCode::kReferenceTooSmall,
                "variability value " + std::to_string(vv) +
                    " exceeds reference value " + std::to_string(reference_value));
  }
  return static_cast<double>(vv) / static_cast<double>(reference_value);
}

NodeVD aggregate(const Activity& activity, const ActivityPath& path,
                 const VariabilityProfile& profile, const AnalysisConfig& config) {
  NodeVD node;
  node.path = path;
  node.kind = activity.kind;

  if (is_join_point(activity, config)) {
    const int vv = variability_value(profile, path, config);
    node.join_point = true;
    node.vv = vv;
    node.vd = variability_degree(vv, config.reference_value);
    node.vd_exact = Rational(vv, config.reference_value);
    return node;
  }
  if (is_basic(activity.kind)) {
    node.vd_exact = Rational(0, 1);
    return node;
  }

  const bool branching = is_branching(activity.kind);
  double sum = 0.0;
  std::optional<Rational> exact_sum = Rational(0, 1);
  int n = 0;
  for (std::size_t i = 0; i < activity.children.size(); ++i) {
    const Activity& child = activity.children[i];
    NodeVD child_vd = aggregate(child, path.child(child.kind, i), profile, config);
    if (branching || is_eligible_child(child, config)) {
      ++n;
      sum += child_vd.vd;
      exact_sum = exact_sum + child_vd.vd_exact;
    }
    node.children.push_back(std::move(child_vd));
  }
  node.n_used = n;
  if (n == 0) {
    node.vd_exact = Rational(0, 1);
    return node;
  }
  node.vd = sum / n;
  if (exact_sum) node.vd_exact = exact_sum->divided_by(n);
  return node;
}

MetricsResult process_adaptability(const ProcessModel& process,
                                   const VariabilityProfile& profile,
                                   const AnalysisConfig& config) {
  config.validate();
  MetricsResult result;
  result.process_name = process.name();
  result.root = aggregate(process.root(), ActivityPath::root(process.root().kind),
                          profile, config);
  result.pam = result.root.vd;
  result.pam_exact = result.root.vd_exact;
  result.config_used = config;
  result.warnings = profile.warnings;
  return result;
}

std::vector<JoinPointWeight> join_point_weights(const ProcessModel& process,
                                                const AnalysisConfig& config) {
  std::vector<JoinPointWeight> out;
  for (const VisitedActivity& visited : iter_activities(process)) {
    if (!is_join_point(*visited.activity, config)) continue;
    // Walk the path from the root, multiplying in each ancestor's 1/n.
    double weight = 1.0;
    const Activity* ancestor = &process.root();
    const auto& steps = visited.path.steps();
    for (std::size_t depth = 1; depth < steps.size(); ++depth) {
      std::size_t divisor = ancestor->children.size();
      if (!is_branching(ancestor->kind)) {
        divisor = static_cast<std::size_t>(std::count_if(
            ancestor->children.begin(), ancestor->children.end(),
            [&](const Activity& c) { return is_eligible_child(c, config); }));
      }
      weight /= static_cast<double>(divisor);
      ancestor = &ancestor->children[steps[depth].index];
    }
    out.push_back({visited.path, weight});
  }
  return out;
}

double linear_weight_oracle(const ProcessModel& process,
                            const VariabilityProfile& profile,
                            const AnalysisConfig& config) {
  double pam = 0.0;
  for (const JoinPointWeight& jp : join_point_weights(process, config)) {
    const int vv = variability_value(profile, jp.path, config);
    pam += jp.weight * variability_degree(vv, config.reference_value);
  }
  return pam;
}

namespace {

void flatten_into(const NodeVD& node, std::vector<const NodeVD*>& out) {
  out.push_back(&node);
  for (const NodeVD& child : node.children) flatten_into(child, out);
}

}  // namespace

std::vector<const NodeVD*> flatten(const NodeVD& root) {
  std::vector<const NodeVD*> out;
  flatten_into(root, out);
  return out;
}

}  // namespace adapt_meter
