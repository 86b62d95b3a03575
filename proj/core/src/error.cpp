#include "adapt_meter/error.hpp"

namespace adapt_meter {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedXml:
      return "MalformedXml";
    case ErrorCode::kUnsupportedElement:
      return "UnsupportedElement";
    case ErrorCode::kStructuralError:
      return "StructuralError";
    case ErrorCode::kMissingPointcut:
      return "MissingPointcut";
    case ErrorCode::kBadAdviceType:
      return "BadAdviceType";
    case ErrorCode::kMultipleAdvice:
      return "MultipleAdvice";
    case ErrorCode::kSelectorSyntax:
      return "SelectorSyntax";
    case ErrorCode::kNotAJoinPoint:
      return "NotAJoinPoint";
    case ErrorCode::kReferenceTooSmall:
      return "ReferenceTooSmall";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kTooManySlots:
      return "TooManySlots";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(message), code_(code), line_(line) {}

}  // namespace adapt_meter
