#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gramtok {

enum class ErrorCode {
  ParserUnavailable,
  TreeHasErrors,
  FormatError,
  NotByteComplete,
  VersionMismatch,
  EmptyCorpus,
  OutOfRange,
  SyntaxInvalid,
  UnknownProduction,
  IncompleteSequence,
  InvalidToken,
  ModeUnsupported,
  DegenerateTable,
  MissingOutcome,
  InsufficientPairs,
  IoError,
};

/// Stable name of an error code ("FormatError", "InvalidToken", ...).
/// These names are part of the machine-readable surface of the CLI.
std::string_view error_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library. Carries a code from the
/// taxonomy above and, where meaningful, a token position or byte offset.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::optional<std::size_t>& position() const noexcept {
    return position_;
  }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace gramtok
