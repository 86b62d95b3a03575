#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "adapt_meter/process_model.hpp"

namespace adapt_meter::detail {

// Minimal element tree. Names are local names; namespace URIs and prefixes
// are dropped on load.
struct XmlElement {
  std::string name;
  Attributes attributes;
  std::vector<XmlElement> children;
  std::string text;  // concatenated character data directly inside
  std::size_t line = 0;
};

// Throws Error(kMalformedXml) with the offending line.
XmlElement load_xml(std::istream& in);

std::string escape_xml(std::string_view text);

}  // namespace adapt_meter::detail
