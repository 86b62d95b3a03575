#include <cctype>

#include "adapt_meter/error.hpp"
#include "adapt_meter/parsers.hpp"

namespace adapt_meter {
namespace {

class SelectorParser {
 public:
  explicit SelectorParser(std::string_view text) : text_(text) {}

  PointcutSelector parse() {
    PointcutSelector selector;
    skip_space();
    while (!at_end()) {
      selector.steps.push_back(parse_step(selector.steps.empty()));
      skip_space();
    }
    if (selector.steps.empty()) fail("empty selector");
    return selector;
  }

 private:
  SelectorStep parse_step(bool first) {
    if (!consume('/')) fail("expected '//'");
    if (!consume('/')) fail("unsupported axis, only '//' is allowed");
    skip_space();
    SelectorStep step;
    step.element = parse_name();
    if (step.element == "process") {
      if (!first) fail("'process' may only appear as the first step");
    } else if (!activity_kind_from_string(step.element)) {
      fail("unknown element '" + step.element + "'");
    }
    skip_space();
    while (consume('[')) {
      skip_space();
      step.predicates.push_back(parse_equality());
      skip_space();
      while (consume_keyword("and")) {
        skip_space();
        step.predicates.push_back(parse_equality());
        skip_space();
      }
      if (!consume(']')) fail("expected ']'");
      skip_space();
    }
    return step;
  }

  std::pair<std::string, std::string> parse_equality() {
    if (!consume('@')) fail("only @attribute=\"value\" predicates are supported");
    std::string attribute = parse_name();
    skip_space();
    if (!consume('=')) fail("expected '=' after @" + attribute);
    skip_space();
    if (at_end() || (peek() != '"' && peek() != '\'')) {
      fail("expected quoted value for @" + attribute);
    }
    const char quote = text_[pos_++];
    const auto end = text_.find(quote, pos_);
    if (end == std::string_view::npos) fail("unterminated string");
    std::string value(text_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return {std::move(attribute), std::move(value)};
  }

  // NCName with an optional, discarded namespace prefix.
  std::string parse_name() {
    auto ncname = [&] {
      const std::size_t start = pos_;
      if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) ||
                        peek() == '_')) {
        fail("expected a name");
      }
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_' || peek() == '-' || peek() == '.')) {
        ++pos_;
      }
      return std::string(text_.substr(start, pos_ - start));
    };
    std::string name = ncname();
    if (consume(':')) name = ncname();
    return name;
  }

  bool consume_keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && !std::isspace(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSelectorSyntax,
                "selector syntax error at offset " + std::to_string(pos_) +
                    ": " + what + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PointcutSelector parse_selector(std::string_view text) {
  return SelectorParser(text).parse();
}

std::string render_selector(const PointcutSelector& selector) {
  std::string out;
  for (const SelectorStep& step : selector.steps) {
    out += "//";
    out += step.element;
    for (const auto& [attribute, value] : step.predicates) {
      const char quote = value.find('"') == std::string::npos ? '"' : '\'';
      out += "[@";
      out += attribute;
      out += '=';
      out += quote;
      out += value;
      out += quote;
      out += ']';
    }
  }
  return out;
}

}  // namespace adapt_meter
