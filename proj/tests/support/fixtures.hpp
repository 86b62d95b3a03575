#pragma once

#include <adapt_meter/adapt_meter.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace adapt_meter::testing {

inline std::string fixture(const std::string& relative) {
  return std::string(ADAPT_METER_FIXTURES) + "/" + relative;
}

inline ProcessModel load_process_fixture(const std::string& relative) {
  std::ifstream in(fixture(relative));
  return parse_process(in);
}

inline Aspect load_aspect_fixture(const std::string& relative) {
  std::ifstream in(fixture(relative));
  return parse_aspect(in);
}

inline std::vector<Aspect> load_aspect_dir(const std::string& relative) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixture(relative))) {
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Aspect> aspects;
  for (const auto& file : files) {
    std::ifstream in(file);
    aspects.push_back(parse_aspect(in));
  }
  return aspects;
}

inline ProcessModel process_from_string(const std::string& xml) {
  std::istringstream in(xml);
  return parse_process(in);
}

inline Aspect aspect_from_string(const std::string& xml) {
  std::istringstream in(xml);
  return parse_aspect(in);
}

// Paths in the travel-booking fixture (sequence with a two-branch switch).
inline const ActivityPath kReceive = *ActivityPath::parse("/process/sequence[0]/receive[0]");
inline const ActivityPath kSwitch = *ActivityPath::parse("/process/sequence[0]/switch[2]");
inline const ActivityPath kInvokeS1 =
    *ActivityPath::parse("/process/sequence[0]/switch[2]/invoke[0]");
inline const ActivityPath kInvokeS2 =
    *ActivityPath::parse("/process/sequence[0]/switch[2]/invoke[1]");
inline const ActivityPath kInvokeS3 = *ActivityPath::parse("/process/sequence[0]/invoke[3]");
inline const ActivityPath kReply = *ActivityPath::parse("/process/sequence[0]/reply[5]");

}  // namespace adapt_meter::testing
