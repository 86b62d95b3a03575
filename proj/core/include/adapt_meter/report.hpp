#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adapt_meter/metrics.hpp"
#include "adapt_meter/sweep.hpp"

namespace adapt_meter {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Rationals are shown next to decimals up to this denominator.
inline constexpr std::int64_t kMaxDisplayDenominator = 9999;

// printf-style fixed notation, e.g. format_fixed(7.0 / 24, 4) == "0.2917".
std::string format_fixed(double value, int decimals);

struct JoinPointDiff {
  ActivityPath path;
  std::optional<double> vd_a;
  std::optional<double> vd_b;
  double delta = 0.0;  // vd_b - vd_a, missing sides count as 0
};

struct Comparison {
  MetricsResult a;
  MetricsResult b;
  double pam_delta = 0.0;         // |pam_b - pam_a|
  double pam_signed_delta = 0.0;  // pam_b - pam_a
  std::vector<JoinPointDiff> join_points;
};

Comparison compare_results(MetricsResult a, MetricsResult b);

std::string render_text(const MetricsResult& result, bool color);
std::string render_json(const MetricsResult& result);

std::string render_compare_text(const Comparison& comparison, bool color);
std::string render_compare_json(const Comparison& comparison);

// Header `case_id,count,pam`, rows ordered by (case_id, count).
std::string render_sweep_csv(const SweepResult& sweep);
// Header `count,min_pam,mean_pam,max_pam`.
std::string render_envelope_csv(std::span<const SweepEnvelope> envelopes);

}  // namespace adapt_meter
