#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adapt_meter/pointcut_matcher.hpp"
#include "adapt_meter/process_model.hpp"
#include "adapt_meter/rational.hpp"

namespace adapt_meter {

// Variability degree of one node of the activity tree.
struct NodeVD {
  ActivityPath path;
  ActivityKind kind = ActivityKind::kSequence;
  bool join_point = false;
  double vd = 0.0;
  // Exact value while the fraction fits in 64 bits.
  std::optional<Rational> vd_exact;
  std::optional<int> vv;      // join points only
  std::optional<int> n_used;  // structured only: the divisor applied
  std::vector<NodeVD> children;
};

struct MetricsResult {
  std::string process_name;
  NodeVD root;
  double pam = 0.0;
  std::optional<Rational> pam_exact;
  AnalysisConfig config_used;
  std::vector<std::string> warnings;
};

// Number of variabilities at a join point. In set mode duplicates of one
// advice type collapse; in raw-clamped mode every binding counts, capped at R.
// Throws Error(kNotAJoinPoint).
int variability_value(const VariabilityProfile& profile, const ActivityPath& path,
                      const AnalysisConfig& config);

// vv / R. Throws Error(kReferenceTooSmall) when vv > R.
double variability_degree(int vv, int reference_value);

// Recursive per-construct aggregation:
//   join point          vv / R
//   other basic         0, and not counted by the parent
//   switch, pick        mean over all branches
//   sequence/flow/while mean over eligible children (0 when there are none)
NodeVD aggregate(const Activity& activity, const ActivityPath& path,
                 const VariabilityProfile& profile, const AnalysisConfig& config);

// PAM is the aggregated degree of the root activity.
MetricsResult process_adaptability(const ProcessModel& process,
                                   const VariabilityProfile& profile,
                                   const AnalysisConfig& config);

struct JoinPointWeight {
  ActivityPath path;
  double weight = 0.0;  // product of 1/n over all ancestors
};

// Pre-order list of join points with the share each one contributes to PAM.
std::vector<JoinPointWeight> join_point_weights(const ProcessModel& process,
                                                const AnalysisConfig& config);

// PAM as a flat weighted sum of join-point degrees. Independent of the
// recursive aggregate; the two must agree.
double linear_weight_oracle(const ProcessModel& process,
                            const VariabilityProfile& profile,
                            const AnalysisConfig& config);

// Pre-order flattening of a NodeVD tree.
std::vector<const NodeVD*> flatten(const NodeVD& root);

}  // namespace adapt_meter
