#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "adapt_meter/parsers.hpp"
#include "adapt_meter/process_model.hpp"

namespace adapt_meter {

struct JoinPointBinding {
  std::string aspect_name;
  std::string pointcut_name;
  ActivityPath path;
  AdviceType advice_type = AdviceType::kBefore;

  friend bool operator==(const JoinPointBinding&, const JoinPointBinding&) = default;
};

// Which advice types are attached where. `entries` and `raw_counts` are
// derived from `bindings`; build through make_profile to keep them in sync.
struct VariabilityProfile {
  std::map<ActivityPath, std::set<AdviceType>> entries;
  std::vector<JoinPointBinding> bindings;
  std::map<ActivityPath, std::map<AdviceType, int>> raw_counts;
  std::vector<std::string> warnings;

  bool empty() const { return bindings.empty(); }
};

// Sorts bindings by (pre-order path, aspect, pointcut, advice type) and
// derives the per-path sets and counts.
VariabilityProfile make_profile(std::vector<JoinPointBinding> bindings,
                                std::vector<std::string> warnings = {});

// Paths selected by the selector, in pre-order without duplicates. Each step
// searches descendant-or-self of the previous step's matches.
std::vector<ActivityPath> match_selector(const PointcutSelector& selector,
                                         const ProcessModel& process);

VariabilityProfile bind_aspects(const ProcessModel& process,
                                std::span<const Aspect> aspects,
                                const AnalysisConfig& config);

}  // namespace adapt_meter
