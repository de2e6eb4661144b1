#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acewiki {

// Every failure surfaced by the library carries one of these codes. The
// names are part of the HTTP API and must stay stable.
enum class ErrorCode {
  DuplicateSurface,
  ReservedWord,
  InvalidSurface,
  WordInUse,
  UnknownWord,
  LexicalError,
  SyntaxError,
  UnboundVariable,
  DeadPrefix,
  EmptyPatternSet,
  UnknownAxiom,
  ParseFailed,
  StaleRevision,
  UnknownSentence,
  VersionConflict,
  FormatError,
  UnknownWordInSentence,
  AnnotationForUnknownSentence,
  BadRequest,
  StorageError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position), line_(line) {}

  ErrorCode code() const { return code_; }
  // Token index (0-based) for parse errors.
  std::optional<std::size_t> position() const { return position_; }
  // Line number (1-based) for file format errors.
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::optional<std::size_t> line_;
};

}  // namespace acewiki
