#include "adapt_meter/pointcut_matcher.hpp"

#include <algorithm>
#include <tuple>

namespace adapt_meter {
namespace {

template <typename Node>
bool predicates_hold(const SelectorStep& step, const Node& node) {
  return std::all_of(step.predicates.begin(), step.predicates.end(),
                     [&](const auto& predicate) {
                       auto value = node.attribute(predicate.first);
                       return value && *value == predicate.second;
                     });
}

}  // namespace

VariabilityProfile make_profile(std::vector<JoinPointBinding> bindings,
                                std::vector<std::string> warnings) {
  std::stable_sort(bindings.begin(), bindings.end(),
                   [](const JoinPointBinding& a, const JoinPointBinding& b) {
                     return std::tie(a.path, a.aspect_name, a.pointcut_name,
                                     a.advice_type) <
                            std::tie(b.path, b.aspect_name, b.pointcut_name,
                                     b.advice_type);
                   });
  VariabilityProfile profile;
  for (const JoinPointBinding& binding : bindings) {
    profile.entries[binding.path].insert(binding.advice_type);
    ++profile.raw_counts[binding.path][binding.advice_type];
  }
  profile.bindings = std::move(bindings);
  profile.warnings = std::move(warnings);
  return profile;
}

std::vector<ActivityPath> match_selector(const PointcutSelector& selector,
                                         const ProcessModel& process) {
  const std::vector<VisitedActivity> nodes = iter_activities(process);
  const std::size_t n = nodes.size();
  // Pre-order: the subtree of node i is [i, subtree_end[i]).
  std::vector<std::size_t> subtree_end(n);
  for (std::size_t i = 0; i < n; ++i) {
    subtree_end[i] = i + count_nodes(*nodes[i].activity);
  }

  // Search scope of the next step; the document scope covers everything.
  std::vector<char> scope(n, 1);
  std::vector<char> matched(n, 0);
  for (const SelectorStep& step : selector.steps) {
    std::fill(matched.begin(), matched.end(), 0);
    if (step.element == "process") {
      if (!predicates_hold(step, process)) return {};
      continue;  // scope stays: every activity descends from <process>
    }
    const auto kind = activity_kind_from_string(step.element);
    for (std::size_t i = 0; i < n; ++i) {
      if (scope[i] && kind == nodes[i].activity->kind &&
          predicates_hold(step, *nodes[i].activity)) {
        matched[i] = 1;
      }
    }
    std::fill(scope.begin(), scope.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!matched[i]) continue;
      std::fill(scope.begin() + static_cast<std::ptrdiff_t>(i),
                scope.begin() + static_cast<std::ptrdiff_t>(subtree_end[i]), 1);
    }
  }

  std::vector<ActivityPath> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (matched[i]) out.push_back(nodes[i].path);
  }
  return out;
}

VariabilityProfile bind_aspects(const ProcessModel& process,
                                std::span<const Aspect> aspects,
                                const AnalysisConfig& config) {
  std::vector<JoinPointBinding> bindings;
  std::vector<std::string> warnings;
  for (const Aspect& aspect : aspects) {
    if (!aspect.enabled && !config.include_disabled_aspects) continue;
    for (const Pointcut& pointcut : aspect.pointcuts) {
      const std::string origin =
          "aspect '" + aspect.name + "' pointcut '" + pointcut.name + "'";
      const auto paths = match_selector(pointcut.selector, process);
      if (paths.empty()) {
        warnings.push_back(origin + ": selector " +
                           render_selector(pointcut.selector) +
                           " matched no activities");
        continue;
      }
      for (const ActivityPath& path : paths) {
        const Activity* node = resolve(process, path);
        if (!is_join_point(*node, config)) {
          warnings.push_back(origin + ": " + path.to_string() +
                             " is not a join point, skipped");
          continue;
        }
        bindings.push_back(
            {aspect.name, pointcut.name, path, aspect.advice_type});
      }
    }
  }
  return make_profile(std::move(bindings), std::move(warnings));
}

}  // namespace adapt_meter
