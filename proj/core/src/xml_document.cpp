#include "xml_document.hpp"

#include <expat.h>

#include <array>
#include <memory>

#include "adapt_meter/error.hpp"

namespace adapt_meter::detail {
namespace {

constexpr char kNamespaceSeparator = '\x1F';

std::string local_name(const XML_Char* qualified) {
  std::string_view name(qualified);
  if (auto pos = name.rfind(kNamespaceSeparator); pos != std::string_view::npos) {
    name.remove_prefix(pos + 1);
  }
  if (auto pos = name.rfind(':'); pos != std::string_view::npos) {
    name.remove_prefix(pos + 1);
  }
  return std::string(name);
}

struct BuildState {
  XML_Parser parser = nullptr;
  std::vector<XmlElement*> stack;
  XmlElement root;
  bool have_root = false;
};

void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
  auto* state = static_cast<BuildState*>(user);
  XmlElement element;
  element.name = local_name(name);
  element.line = XML_GetCurrentLineNumber(state->parser);
  for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
    element.attributes.insert_or_assign(local_name(attrs[i]), attrs[i + 1]);
  }
  XmlElement* slot;
  if (state->stack.empty()) {
    state->root = std::move(element);
    state->have_root = true;
    slot = &state->root;
  } else {
    auto& siblings = state->stack.back()->children;
    siblings.push_back(std::move(element));
    slot = &siblings.back();
  }
  state->stack.push_back(slot);
}

void on_end(void* user, const XML_Char*) {
  static_cast<BuildState*>(user)->stack.pop_back();
}

void on_text(void* user, const XML_Char* data, int len) {
  auto* state = static_cast<BuildState*>(user);
  if (!state->stack.empty()) {
    state->stack.back()->text.append(data, static_cast<std::size_t>(len));
  }
}

}  // namespace

XmlElement load_xml(std::istream& in) {
  std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
      XML_ParserCreateNS(nullptr, kNamespaceSeparator), &XML_ParserFree);
  BuildState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), &on_start, &on_end);
  XML_SetCharacterDataHandler(parser.get(), &on_text);

  std::array<char, 8192> buffer;
  bool done = false;
  while (!done) {
    in.read(buffer.data(), buffer.size());
    const auto got = in.gcount();
    done = got < static_cast<std::streamsize>(buffer.size());
    if (XML_Parse(parser.get(), buffer.data(), static_cast<int>(got),
                  done ? 1 : 0) == XML_STATUS_ERROR) {
      const auto line = XML_GetCurrentLineNumber(parser.get());
      throw Error(ErrorCode::kMalformedXml,
                  std::string("malformed XML: ") +
                      XML_ErrorString(XML_GetErrorCode(parser.get())),
                  line);
    }
  }
  if (!state.have_root) {
    throw Error(ErrorCode::kMalformedXml, "malformed XML: no root element", 1);
  }
  return std::move(state.root);
}

std::string escape_xml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\n':
        out += "&#10;";
        break;
      case '\t':
        out += "&#9;";
        break;
      case '\r':
        out += "&#13;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace adapt_meter::detail
