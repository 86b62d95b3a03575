#include "adapt_meter/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

namespace adapt_meter {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kBold = "\x1b[1m";
constexpr std::string_view kDim = "\x1b[2m";
constexpr std::string_view kReset = "\x1b[0m";

std::string styled(std::string_view text, std::string_view style, bool color) {
  if (!color) return std::string(text);
  return std::string(style) + std::string(text) + std::string(kReset);
}

std::string value_with_fraction(double value, const std::optional<Rational>& exact) {
  std::string out = format_fixed(value, 4);
  if (exact && exact->den() > 1 && exact->den() <= kMaxDisplayDenominator) {
    out += " (" + exact->to_string() + ")";
  }
  return out;
}

std::string join_point_list(const AnalysisConfig& config) {
  std::string out;
  for (ActivityKind kind : config.join_point_kinds) {
    if (!out.empty()) out += ',';
    out += to_string(kind);
  }
  return out;
}

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

ordered_json exact_json(const std::optional<Rational>& exact) {
  if (!exact) return nullptr;
  return exact->to_string();
}

ordered_json metrics_json(const MetricsResult& result) {
  ordered_json nodes = ordered_json::array();
  for (const NodeVD* node : flatten(result.root)) {
    ordered_json entry;
    entry["path"] = node->path.to_string();
    entry["kind"] = std::string(to_string(node->kind));
    entry["join_point"] = node->join_point;
    entry["vv"] = node->vv ? ordered_json(*node->vv) : ordered_json(nullptr);
    entry["vd"] = node->vd;
    entry["vd_exact"] = exact_json(node->vd_exact);
    entry["n_used"] = node->n_used ? ordered_json(*node->n_used) : ordered_json(nullptr);
    nodes.push_back(std::move(entry));
  }
  ordered_json kinds = ordered_json::array();
  for (ActivityKind kind : result.config_used.join_point_kinds) {
    kinds.push_back(std::string(to_string(kind)));
  }
  ordered_json out;
  out["process"] = result.process_name;
  out["pam"] = result.pam;
  out["pam_exact"] = exact_json(result.pam_exact);
  out["reference_value"] = result.config_used.reference_value;
  out["count_mode"] = std::string(to_string(result.config_used.count_mode));
  out["join_point_kinds"] = std::move(kinds);
  out["nodes"] = std::move(nodes);
  out["warnings"] = result.warnings;
  return out;
}

std::string signed_fixed(double value) {
  if (std::fabs(value) < 0.00005) return format_fixed(0.0, 4);
  return (value > 0 ? "+" : "") + format_fixed(value, 4);
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
  return buffer;
}

Comparison compare_results(MetricsResult a, MetricsResult b) {
  Comparison out;
  out.pam_signed_delta = b.pam - a.pam;
  out.pam_delta = std::fabs(out.pam_signed_delta);

  std::map<ActivityPath, JoinPointDiff> rows;
  for (const NodeVD* node : flatten(a.root)) {
    if (node->join_point) rows[node->path].vd_a = node->vd;
  }
  for (const NodeVD* node : flatten(b.root)) {
    if (node->join_point) rows[node->path].vd_b = node->vd;
  }
  for (auto& [path, row] : rows) {
    row.path = path;
    row.delta = row.vd_b.value_or(0.0) - row.vd_a.value_or(0.0);
    out.join_points.push_back(row);
  }
  out.a = std::move(a);
  out.b = std::move(b);
  return out;
}

std::string render_text(const MetricsResult& result, bool color) {
  const auto nodes = flatten(result.root);
  std::size_t path_width = 4;
  for (const NodeVD* node : nodes) {
    path_width = std::max(path_width, node->path.to_string().size());
  }
  path_width += 2;

  std::ostringstream out;
  out << styled("Process " + result.process_name, kBold, color) << '\n';
  out << "reference value R = " << result.config_used.reference_value
      << ", count mode = " << to_string(result.config_used.count_mode)
      << ", join points = " << join_point_list(result.config_used) << "\n\n";
  out << styled(pad("path", path_width) + pad("kind", 10) + pad("VV", 5) +
                    pad("n", 5) + "VD",
                kDim, color)
      << '\n';
  for (const NodeVD* node : nodes) {
    out << pad(node->path.to_string(), path_width)
        << pad(std::string(to_string(node->kind)), 10)
        << pad(node->vv ? std::to_string(*node->vv) : "-", 5)
        << pad(node->n_used ? std::to_string(*node->n_used) : "-", 5)
        << value_with_fraction(node->vd, node->vd_exact) << '\n';
  }
  out << '\n'
      << styled("PAM = " + value_with_fraction(result.pam, result.pam_exact), kBold,
                color)
      << '\n';
  return out.str();
}

std::string render_json(const MetricsResult& result) {
  ordered_json out;
  out["schema_version"] = std::string(kSchemaVersion);
  out["tool_version"] = std::string(kToolVersion);
  out["command"] = "analyze";
  const ordered_json body = metrics_json(result);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out.dump(2) + "\n";
}

std::string render_compare_text(const Comparison& c, bool color) {
  std::size_t path_width = 4;
  for (const JoinPointDiff& row : c.join_points) {
    path_width = std::max(path_width, row.path.to_string().size());
  }
  path_width += 2;
  const char* higher = c.pam_signed_delta > 0   ? "B higher"
                       : c.pam_signed_delta < 0 ? "A higher"
                                                : "equal";

  std::ostringstream out;
  out << "A: " << c.a.process_name << "  PAM = "
      << value_with_fraction(c.a.pam, c.a.pam_exact) << '\n';
  out << "B: " << c.b.process_name << "  PAM = "
      << value_with_fraction(c.b.pam, c.b.pam_exact) << '\n';
  out << styled("delta = " + format_fixed(c.pam_delta, 4) + " (" + higher + ")",
                kBold, color)
      << "\n\n";
  out << styled(pad("join point", path_width) + pad("VD(A)", 9) + pad("VD(B)", 9) +
                    "delta",
                kDim, color)
      << '\n';
  for (const JoinPointDiff& row : c.join_points) {
    out << pad(row.path.to_string(), path_width)
        << pad(row.vd_a ? format_fixed(*row.vd_a, 4) : "-", 9)
        << pad(row.vd_b ? format_fixed(*row.vd_b, 4) : "-", 9)
        << signed_fixed(row.delta) << '\n';
  }
  return out.str();
}

std::string render_compare_json(const Comparison& c) {
  ordered_json rows = ordered_json::array();
  for (const JoinPointDiff& row : c.join_points) {
    ordered_json entry;
    entry["path"] = row.path.to_string();
    entry["vd_a"] = row.vd_a ? ordered_json(*row.vd_a) : ordered_json(nullptr);
    entry["vd_b"] = row.vd_b ? ordered_json(*row.vd_b) : ordered_json(nullptr);
    entry["delta"] = row.delta;
    rows.push_back(std::move(entry));
  }
  ordered_json out;
  out["schema_version"] = std::string(kSchemaVersion);
  out["tool_version"] = std::string(kToolVersion);
  out["command"] = "compare";
  out["a"] = metrics_json(c.a);
  out["b"] = metrics_json(c.b);
  out["pam_delta"] = c.pam_delta;
  out["pam_signed_delta"] = c.pam_signed_delta;
  out["higher"] = c.pam_signed_delta > 0 ? "b" : c.pam_signed_delta < 0 ? "a" : "equal";
  out["join_points"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string render_sweep_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "case_id,count,pam\n";
  for (const SweepCase& c : sweep.cases) {
    for (const SweepPoint& point : c.series) {
      out << c.case_id << ',' << point.count << ',' << format_fixed(point.pam, 6)
          << '\n';
    }
  }
  return out.str();
}

std::string render_envelope_csv(std::span<const SweepEnvelope> envelopes) {
  std::ostringstream out;
  out << "count,min_pam,mean_pam,max_pam\n";
  for (const SweepEnvelope& e : envelopes) {
    out << e.count << ',' << format_fixed(e.min_pam, 6) << ','
        << format_fixed(e.mean_pam, 6) << ',' << format_fixed(e.max_pam, 6) << '\n';
  }
  return out.str();
}

}  // namespace adapt_meter
