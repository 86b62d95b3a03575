#include <algorithm>
#include <sstream>

#include "adapt_meter/error.hpp"
#include "adapt_meter/parsers.hpp"
#include "xml_document.hpp"

namespace adapt_meter {
namespace {

using detail::XmlElement;

[[noreturn]] void unsupported(const XmlElement& element, std::string_view where) {
  throw Error(ErrorCode::kUnsupportedElement,
              "unsupported element <" + element.name + "> in " +
                  std::string(where),
              element.line);
}

[[noreturn]] void structural(const XmlElement& element, const std::string& what) {
  throw Error(ErrorCode::kStructuralError, what, element.line);
}

std::vector<Declaration> parse_declarations(const XmlElement& section,
                                            std::string_view item) {
  std::vector<Declaration> out;
  for (const XmlElement& child : section.children) {
    if (child.name != item) unsupported(child, "<" + section.name + ">");
    Declaration decl;
    decl.attributes = child.attributes;
    if (auto it = decl.attributes.find("name"); it != decl.attributes.end()) {
      decl.name = it->second;
      decl.attributes.erase(it);
    }
    out.push_back(std::move(decl));
  }
  return out;
}

Activity parse_activity(const XmlElement& element);

// The single activity wrapped by a case/otherwise/onMessage/onAlarm/advice.
Activity parse_wrapped(const XmlElement& wrapper) {
  if (wrapper.children.size() != 1) {
    structural(wrapper, "<" + wrapper.name +
                            "> must wrap exactly one activity, found " +
                            std::to_string(wrapper.children.size()) +
                            " (wrap several in a <sequence>)");
  }
  return parse_activity(wrapper.children.front());
}

Activity parse_activity(const XmlElement& element) {
  auto kind = activity_kind_from_string(element.name);
  if (!kind) unsupported(element, "activity position");

  Activity activity;
  activity.kind = *kind;
  activity.line = element.line;
  activity.attributes = element.attributes;
  if (auto it = activity.attributes.find("name"); it != activity.attributes.end()) {
    activity.name = it->second;
    activity.attributes.erase(it);
  }

  // Basic activity content (assign copies, correlations) is opaque.
  if (is_basic(*kind)) return activity;

  if (*kind == ActivityKind::kSwitch || *kind == ActivityKind::kPick) {
    const bool is_switch = *kind == ActivityKind::kSwitch;
    for (const XmlElement& branch : element.children) {
      BranchLabel label;
      if (is_switch && branch.name == "case") {
        label.kind = BranchKind::kCase;
      } else if (is_switch && branch.name == "otherwise") {
        label.kind = BranchKind::kOtherwise;
      } else if (!is_switch && branch.name == "onMessage") {
        label.kind = BranchKind::kOnMessage;
      } else if (!is_switch && branch.name == "onAlarm") {
        label.kind = BranchKind::kOnAlarm;
      } else {
        unsupported(branch, "<" + element.name + ">");
      }
      label.attributes = branch.attributes;
      activity.children.push_back(parse_wrapped(branch));
      activity.branches.push_back(std::move(label));
    }
    if (activity.children.empty()) {
      structural(element, "<" + element.name + "> needs at least one branch");
    }
    const auto otherwise = std::count_if(
        activity.branches.begin(), activity.branches.end(),
        [](const BranchLabel& l) { return l.kind == BranchKind::kOtherwise; });
    if (otherwise > 1) {
      structural(element, "<switch> has more than one <otherwise>");
    }
    return activity;
  }

  for (const XmlElement& child : element.children) {
    activity.children.push_back(parse_activity(child));
  }
  return activity;
}

bool parse_flag(const XmlElement& element, const std::string& value) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  structural(element, "enabled must be true or false, got '" + value + "'");
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

// Selector errors carry no position; attach the pointcut's line.
PointcutSelector parse_selector_at(const XmlElement& element) {
  try {
    return parse_selector(trim(element.text));
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), element.line);
  }
}

void write_attributes(std::ostream& out, const std::optional<std::string>& name,
                      const Attributes& attributes) {
  Attributes sorted = attributes;
  if (name) sorted.insert_or_assign("name", *name);
  for (const auto& [key, value] : sorted) {
    out << ' ' << key << "=\"" << detail::escape_xml(value) << '"';
  }
}

void write_declarations(std::ostream& out, std::string_view section,
                        std::string_view item,
                        const std::vector<Declaration>& decls) {
  if (decls.empty()) return;
  out << "  <" << section << ">\n";
  for (const Declaration& decl : decls) {
    out << "    <" << item;
    write_attributes(out, decl.name, decl.attributes);
    out << "/>\n";
  }
  out << "  </" << section << ">\n";
}

void write_activity(std::ostream& out, const Activity& activity, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const auto kind = to_string(activity.kind);
  out << indent << '<' << kind;
  write_attributes(out, activity.name, activity.attributes);
  if (activity.children.empty()) {
    out << "/>\n";
    return;
  }
  out << ">\n";
  for (std::size_t i = 0; i < activity.children.size(); ++i) {
    if (!activity.branches.empty()) {
      const BranchLabel& label = activity.branches[i];
      out << indent << "  <" << to_string(label.kind);
      write_attributes(out, std::nullopt, label.attributes);
      out << ">\n";
      write_activity(out, activity.children[i], depth + 2);
      out << indent << "  </" << to_string(label.kind) << ">\n";
    } else {
      write_activity(out, activity.children[i], depth + 1);
    }
  }
  out << indent << "</" << kind << ">\n";
}

}  // namespace

ProcessModel parse_process(std::istream& in) {
  const XmlElement doc = detail::load_xml(in);
  if (doc.name != "process") {
    structural(doc, "expected <process> root element, found <" + doc.name + ">");
  }
  Attributes attributes = doc.attributes;
  std::string name;
  if (auto it = attributes.find("name"); it != attributes.end()) {
    name = it->second;
    attributes.erase(it);
  }
  if (name.empty()) structural(doc, "<process> requires a non-empty name");

  std::vector<Declaration> partner_links;
  std::vector<Declaration> variables;
  std::optional<Activity> root;
  for (const XmlElement& child : doc.children) {
    if (child.name == "partnerLinks") {
      auto decls = parse_declarations(child, "partnerLink");
      partner_links.insert(partner_links.end(), decls.begin(), decls.end());
    } else if (child.name == "variables") {
      auto decls = parse_declarations(child, "variable");
      variables.insert(variables.end(), decls.begin(), decls.end());
    } else {
      if (!activity_kind_from_string(child.name)) unsupported(child, "<process>");
      if (root) structural(child, "<process> must contain exactly one root activity");
      root = parse_activity(child);
    }
  }
  if (!root) structural(doc, "<process> has no root activity");
  if (!is_structured(root->kind)) {
    structural(doc, "process root must be a structured activity, found <" +
                        std::string(to_string(root->kind)) + ">");
  }
  return ProcessModel(std::move(name), std::move(*root), std::move(attributes),
                      std::move(partner_links), std::move(variables));
}

Aspect parse_aspect(std::istream& in) {
  const XmlElement doc = detail::load_xml(in);
  if (doc.name != "aspect") {
    structural(doc, "expected <aspect> root element, found <" + doc.name + ">");
  }
  Aspect aspect;
  if (auto it = doc.attributes.find("name"); it != doc.attributes.end()) {
    aspect.name = it->second;
  }
  if (aspect.name.empty()) structural(doc, "<aspect> requires a non-empty name");
  if (auto it = doc.attributes.find("enabled"); it != doc.attributes.end()) {
    aspect.enabled = parse_flag(doc, it->second);
  }

  const XmlElement* advice = nullptr;
  for (const XmlElement& child : doc.children) {
    if (child.name == "partnerLinks") {
      auto decls = parse_declarations(child, "partnerLink");
      aspect.partner_links.insert(aspect.partner_links.end(), decls.begin(),
                                  decls.end());
    } else if (child.name == "variables") {
      auto decls = parse_declarations(child, "variable");
      aspect.variables.insert(aspect.variables.end(), decls.begin(), decls.end());
    } else if (child.name == "pointcut") {
      Pointcut pointcut;
      if (auto it = child.attributes.find("name"); it != child.attributes.end()) {
        pointcut.name = it->second;
      }
      pointcut.selector = parse_selector_at(child);
      pointcut.line = child.line;
      aspect.pointcuts.push_back(std::move(pointcut));
    } else if (child.name == "advice") {
      if (advice) {
        throw Error(ErrorCode::kMultipleAdvice,
                    "aspect '" + aspect.name +
                        "' declares more than one <advice>; split it into "
                        "one aspect file per advice",
                    child.line);
      }
      advice = &child;
    } else {
      unsupported(child, "<aspect>");
    }
  }
  if (aspect.pointcuts.empty()) {
    throw Error(ErrorCode::kMissingPointcut,
                "aspect '" + aspect.name + "' has no <pointcut>", doc.line);
  }
  if (!advice) structural(doc, "aspect '" + aspect.name + "' has no <advice>");

  const auto type_it = advice->attributes.find("type");
  const std::string type =
      type_it == advice->attributes.end() ? std::string() : type_it->second;
  auto advice_type = advice_type_from_string(type);
  if (!advice_type) {
    throw Error(ErrorCode::kBadAdviceType,
                "advice type must be before, around or after, got '" + type + "'",
                advice->line);
  }
  aspect.advice_type = *advice_type;
  aspect.advice_body = parse_wrapped(*advice);
  validate_activity(aspect.advice_body);
  return aspect;
}

std::string root_element_name(std::istream& in) {
  return detail::load_xml(in).name;
}

std::string serialize_process(const ProcessModel& process) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<process";
  write_attributes(out, process.name(), process.attributes());
  out << ">\n";
  write_declarations(out, "partnerLinks", "partnerLink", process.partner_links());
  write_declarations(out, "variables", "variable", process.variables());
  write_activity(out, process.root(), 1);
  out << "</process>\n";
  return out.str();
}

}  // namespace adapt_meter
