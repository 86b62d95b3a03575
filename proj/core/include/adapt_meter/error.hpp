#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace adapt_meter {

enum class ErrorCode {
  kMalformedXml,
  kUnsupportedElement,
  kStructuralError,
  kMissingPointcut,
  kBadAdviceType,
  kMultipleAdvice,
  kSelectorSyntax,
  kNotAJoinPoint,
  kReferenceTooSmall,
  kInvalidConfig,
  kTooManySlots,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports. `line` is 1-based and 0 when the error
// has no source position (selector text, metric preconditions).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace adapt_meter
