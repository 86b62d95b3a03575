#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adapt_meter/adapt_meter.hpp"

namespace adapt_meter::cli {
namespace {

namespace fs = std::filesystem;

struct ConfigFlags {
  int reference_value = 3;
  std::string join_points = "invoke,receive,reply";
  std::string count_mode = "set";
  bool include_disabled = false;
};

void add_config_flags(CLI::App& cmd, ConfigFlags& flags) {
  cmd.add_option("--reference-value", flags.reference_value,
                 "Maximum variability value per join point (R)")
      ->capture_default_str();
  cmd.add_option("--join-points", flags.join_points,
                 "Comma-separated basic activity kinds treated as join points")
      ->capture_default_str();
  cmd.add_option("--count-mode", flags.count_mode,
                 "How repeated advice types at one join point are counted")
      ->check(CLI::IsMember({"set", "raw-clamped"}))
      ->capture_default_str();
  cmd.add_flag("--include-disabled", flags.include_disabled,
               "Bind aspects marked enabled=\"false\" as well");
}

AnalysisConfig build_config(const ConfigFlags& flags) {
  AnalysisConfig config;
  config.reference_value = flags.reference_value;
  config.count_mode = *count_mode_from_string(flags.count_mode);
  config.include_disabled_aspects = flags.include_disabled;
  config.join_point_kinds.clear();
  std::stringstream list(flags.join_points);
  std::string item;
  while (std::getline(list, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    auto kind = activity_kind_from_string(item);
    if (!kind) {
      throw Failure{kExitInput, "error: unknown activity kind '" + item +
                                    "' in --join-points"};
    }
    config.join_point_kinds.insert(*kind);
  }
  try {
    config.validate();
  } catch (const Error& e) {
    throw Failure{kExitInput, std::string("error: ") + e.what()};
  }
  return config;
}

std::string describe(const std::string& file, const Error& e) {
  std::string out = file;
  if (e.line() > 0) out += ":" + std::to_string(e.line());
  out += ": error: ";
  out += e.what();
  out += " [";
  out += to_string(e.code());
  out += "]";
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Failure{kExitIo, "error: cannot read '" + path + "': " +
                               (fs::exists(path, ec) ? "not a regular file"
                                                     : "no such file")};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "error: cannot open '" + path + "'"};
  return in;
}

template <typename Parse>
auto parse_file(const std::string& path, Parse parse) {
  std::ifstream in = open_input(path);
  try {
    return parse(in);
  } catch (const Error& e) {
    throw Failure{kExitInput, describe(path, e)};
  }
}

ProcessModel load_process(const std::string& path) {
  return parse_file(path, [](std::istream& in) { return parse_process(in); });
}

std::vector<Aspect> load_aspects(const std::vector<std::string>& paths) {
  std::vector<Aspect> aspects;
  for (const std::string& file : expand_aspect_paths(paths)) {
    aspects.push_back(
        parse_file(file, [](std::istream& in) { return parse_aspect(in); }));
  }
  return aspects;
}

MetricsResult analyze(const std::string& process_path,
                      const std::vector<std::string>& aspect_paths,
                      const AnalysisConfig& config) {
  const ProcessModel process = load_process(process_path);
  const std::vector<Aspect> aspects = load_aspects(aspect_paths);
  const VariabilityProfile profile = bind_aspects(process, aspects, config);
  try {
    return process_adaptability(process, profile, config);
  } catch (const Error& e) {
    throw Failure{kExitInput, describe(process_path, e)};
  }
}

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
}

std::vector<char*> to_argv(std::vector<std::string>& args) {
  std::vector<char*> argv;
  for (std::string& arg : args) argv.push_back(arg.data());
  argv.push_back(nullptr);
  return argv;
}

}  // namespace

std::vector<std::string> expand_aspect_paths(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const std::string& path : paths) {
    std::error_code ec;
    if (!fs::is_directory(path, ec)) {
      out.push_back(path);
      continue;
    }
    std::vector<fs::path> candidates;
    for (const auto& entry : fs::directory_iterator(path, ec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml") {
        candidates.push_back(entry.path());
      }
    }
    if (ec) throw Failure{kExitIo, "error: cannot list '" + path + "': " + ec.message()};
    std::sort(candidates.begin(), candidates.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.filename().string() < b.filename().string();
              });
    for (const fs::path& candidate : candidates) {
      const std::string file = candidate.string();
      const std::string root = parse_file(
          file, [](std::istream& in) { return root_element_name(in); });
      if (root == "aspect") out.push_back(file);
    }
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& terminal) {
  CLI::App app{"Static adaptability metrics for aspect-oriented BPEL processes",
               "adapt-meter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format = "text";

  // analyze
  std::string analyze_process;
  std::vector<std::string> analyze_aspects;
  ConfigFlags analyze_flags;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Compute the process adaptability metric");
  analyze_cmd->add_option("process", analyze_process, "BPEL process file")
      ->required();
  analyze_cmd
      ->add_option("--aspects", analyze_aspects, "Aspect file or directory")
      ->allow_extra_args(false);
  add_config_flags(*analyze_cmd, analyze_flags);
  analyze_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // sweep
  std::string sweep_process;
  std::vector<std::string> sweep_aspects;
  int cases = 3;
  std::uint64_t seed = 42;
  bool exhaustive = false;
  std::string out_file;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "PAM as variabilities are added one by one (CSV)");
  sweep_cmd->add_option("process", sweep_process, "BPEL process file")->required();
  sweep_cmd->add_option("--aspects", sweep_aspects, "Accepted and ignored")
      ->allow_extra_args(false);
  sweep_cmd->add_option("--cases", cases, "Number of random placement orders")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep_cmd->add_option("--seed", seed, "Seed for placement orders")
      ->capture_default_str();
  sweep_cmd->add_flag("--exhaustive", exhaustive,
                      "min/mean/max over every slot subset (at most 12 slots)");
  sweep_cmd->add_option("--out", out_file, "Write CSV here instead of stdout");

  // compare
  std::string compare_a;
  std::string compare_b;
  std::vector<std::string> compare_aspects;
  std::vector<std::string> compare_aspects2;
  ConfigFlags compare_flags;
  auto* compare_cmd =
      app.add_subcommand("compare", "Compare the adaptability of two processes");
  compare_cmd->add_option("a", compare_a, "First BPEL process")->required();
  compare_cmd->add_option("b", compare_b, "Second BPEL process")->required();
  compare_cmd
      ->add_option("--aspects", compare_aspects, "Aspects for the first process")
      ->allow_extra_args(false);
  auto* aspects2_opt =
      compare_cmd
          ->add_option("--aspects2", compare_aspects2,
                       "Aspects for the second process (default: same as --aspects)")
          ->allow_extra_args(false);
  add_config_flags(*compare_cmd, compare_flags);
  compare_cmd->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv = to_argv(argv_storage);
  try {
    app.parse(static_cast<int>(argv_storage.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) {
      const AnalysisConfig config = build_config(analyze_flags);
      const MetricsResult result = analyze(analyze_process, analyze_aspects, config);
      print_warnings(err, result.warnings);
      out << (format == "json" ? render_json(result)
                               : render_text(result, terminal.color));
      return kExitOk;
    }

    if (*sweep_cmd) {
      if (!sweep_aspects.empty()) {
        err << "warning: sweep places variabilities itself; --aspects is ignored\n";
      }
      const ProcessModel process = load_process(sweep_process);
      const AnalysisConfig config;
      std::string csv;
      try {
        if (exhaustive) {
          csv = render_envelope_csv(exhaustive_sweep(process, config));
        } else {
          csv = render_sweep_csv(run_sweep(process, cases, seed, config));
        }
      } catch (const Error& e) {
        throw Failure{kExitInput, describe(sweep_process, e)};
      }
      if (out_file.empty()) {
        out << csv;
        return kExitOk;
      }
      std::ofstream file(out_file, std::ios::binary);
      file << csv;
      file.close();
      if (!file) throw Failure{kExitIo, "error: cannot write '" + out_file + "'"};
      return kExitOk;
    }

    const AnalysisConfig config = build_config(compare_flags);
    const auto& aspects_b = aspects2_opt->count() > 0 ? compare_aspects2 : compare_aspects;
    MetricsResult a = analyze(compare_a, compare_aspects, config);
    MetricsResult b = analyze(compare_b, aspects_b, config);
    print_warnings(err, a.warnings);
    print_warnings(err, b.warnings);
    const Comparison comparison = compare_results(std::move(a), std::move(b));
    out << (format == "json" ? render_compare_json(comparison)
                             : render_compare_text(comparison, terminal.color));
    return kExitOk;
  } catch (const Failure& failure) {
    err << failure.message << '\n';
    return failure.exit_code;
  }
}

}  // namespace adapt_meter::cli
