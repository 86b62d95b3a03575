#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adapt_meter/process_model.hpp"

namespace adapt_meter {

// One `//element[@attr="value"]...` step. Predicates are conjunctive
// attribute equalities.
struct SelectorStep {
  std::string element;  // "process" or an activity kind
  std::vector<std::pair<std::string, std::string>> predicates;

  friend bool operator==(const SelectorStep&, const SelectorStep&) = default;
};

struct PointcutSelector {
  std::vector<SelectorStep> steps;

  friend bool operator==(const PointcutSelector&, const PointcutSelector&) = default;
};

struct Pointcut {
  std::string name;
  PointcutSelector selector;
  std::size_t line = 0;
};

struct Aspect {
  std::string name;
  bool enabled = true;
  std::vector<Declaration> partner_links;
  std::vector<Declaration> variables;
  std::vector<Pointcut> pointcuts;
  AdviceType advice_type = AdviceType::kBefore;
  // Kept for reporting; metrics never look inside it.
  Activity advice_body;
};

// Accepts the XPath subset `//name[@a="v"][@b='w' and @c="x"]...`.
// Throws Error(kSelectorSyntax).
PointcutSelector parse_selector(std::string_view text);
std::string render_selector(const PointcutSelector& selector);

// Both throw Error with the source line of the offending element.
ProcessModel parse_process(std::istream& in);
Aspect parse_aspect(std::istream& in);

// Local name of the document's root element (for aspect discovery).
std::string root_element_name(std::istream& in);

// Two-space indented XML with attributes sorted by name.
std::string serialize_process(const ProcessModel& process);

}  // namespace adapt_meter
